"""Dense symmetric linear algebra primitives used by the bundle solver.

Everything here operates on small dense symmetric matrices (n up to a few
hundred); sparse structure and iterative eigensolvers are out of scope.
"""

from __future__ import annotations

import numpy as np

from .exceptions import NotPositiveDefiniteError, NumericError

# Relative slack for the "already positive definite enough" bypass in
# psd_modify.  Keeps the operation exactly idempotent.
_BYPASS_SLACK = 1e-12


def sym(A):
    """Symmetrize as (A + A') / 2."""
    A = np.asarray(A, dtype=float)
    return 0.5 * (A + A.T)


def _eigh_checked(A):
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NumericError(f"expected a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise NumericError("matrix has non-finite entries")
    try:
        return np.linalg.eigh(sym(A))
    except np.linalg.LinAlgError as exc:  # pragma: no cover - eigh on finite sym input
        raise NumericError(f"eigendecomposition failed: {exc}") from exc


def spectral_norm(A):
    """Largest absolute eigenvalue of a symmetric matrix."""
    w, _ = _eigh_checked(A)
    return float(np.max(np.abs(w))) if w.size else 0.0


def default_floor(A):
    """Default eigenvalue floor for psd_modify: 1e-8 * max(1, |A|)."""
    return 1e-8 * max(1.0, spectral_norm(A))


def psd_modify(A, floor=None, cap=None):
    """Positive definite modification by eigenvalue clipping.

    Eigenvalues below `floor` are raised to it (and above `cap` lowered to it,
    when given); eigenvectors are kept.  A matrix that already satisfies the
    bounds is returned unchanged, which makes the operation idempotent.
    """
    A = np.asarray(A, dtype=float)
    w, V = _eigh_checked(A)
    if floor is None:
        floor = 1e-8 * max(1.0, float(np.max(np.abs(w))) if w.size else 0.0)
    floor = float(floor)
    if floor <= 0.0:
        raise NumericError(f"floor must be positive, got {floor}")
    slack = _BYPASS_SLACK * max(1.0, float(np.max(np.abs(w))) if w.size else 0.0)
    if cap is not None and cap < floor:
        # Contradictory bounds; the norm cap wins and the result is cap * I.
        if w.size and w[0] >= cap - slack and w[-1] <= cap + slack:
            return A
        return float(cap) * np.eye(A.shape[0])
    lo_ok = w.size == 0 or w[0] >= floor - slack
    hi_ok = cap is None or w.size == 0 or w[-1] <= cap + slack
    if lo_ok and hi_ok:
        return A
    w = np.maximum(w, floor)
    if cap is not None:
        w = np.minimum(w, float(cap))
    return sym((V * w) @ V.T)


def inv_sqrt_psd(A):
    """Inverse matrix square root of a symmetric positive definite matrix.

    Returns H with H @ H = inv(A); raises NotPositiveDefiniteError when the
    smallest eigenvalue is not strictly positive (callers are expected to
    psd_modify first).
    """
    w, V = _eigh_checked(A)
    if w.size == 0 or w[0] <= 0.0:
        raise NotPositiveDefiniteError(
            f"matrix is not positive definite (lambda_min = {w[0] if w.size else 'n/a'})"
        )
    return sym((V / np.sqrt(w)) @ V.T)


def damping_factor(matrix_norm, cap):
    """Damping rho = min(1, cap / norm), with rho = 1 at norm 0.

    The damped matrix rho * G then satisfies |rho * G| <= cap.
    """
    matrix_norm = float(matrix_norm)
    cap = float(cap)
    if matrix_norm < 0.0:
        raise NumericError(f"matrix norm must be nonnegative, got {matrix_norm}")
    if cap <= 0.0:
        raise NumericError(f"cap must be positive, got {cap}")
    if matrix_norm == 0.0:
        return 1.0
    return min(1.0, cap / matrix_norm)
