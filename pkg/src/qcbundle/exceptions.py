"""Exception hierarchy for the solver library."""

from __future__ import annotations


class QcbundleError(Exception):
    """Base class for all library errors."""


class InvalidProblemError(QcbundleError):
    """The problem definition violates its contract (empty constraint list, bad dimension, ...)."""


class UnknownProblemError(InvalidProblemError):
    """Requested name is not in the built-in registry."""

    def __init__(self, name, known):
        self.name = name
        self.known = tuple(known)
        super().__init__(
            f"unknown problem {name!r}; available: {', '.join(self.known)}"
        )


class OracleError(QcbundleError):
    """An oracle raised or returned non-finite data.  Carries the query point."""

    def __init__(self, message, point=None):
        self.point = None if point is None else tuple(float(v) for v in point)
        super().__init__(message if self.point is None else f"{message} at point {self.point}")


class InfeasibleStartError(QcbundleError):
    """Starting point is not strictly feasible (F(x1) >= 0)."""


class NumericError(QcbundleError):
    """Dense linear algebra failed (non-finite input, eigendecomposition breakdown)."""


class NotPositiveDefiniteError(NumericError):
    """Matrix required to be positive definite is not."""


class SubproblemError(QcbundleError):
    """Search-direction QCQP did not reach its tolerances.

    Carries the best iterate found so the driver can decide whether it is
    still usable.
    """

    def __init__(self, message, best=None, kkt_residual=None, gap=None):
        self.best = best
        self.kkt_residual = kkt_residual
        self.gap = gap
        super().__init__(message)


class SubproblemInconsistencyError(QcbundleError):
    """Multipliers returned by the subproblem violate their sign/normalization contract."""


class LineSearchError(QcbundleError):
    """Line search exceeded its iteration cap.  Carries the final bracket."""

    def __init__(self, message, t_lower=None, t_upper=None, last_sample=None, last_t=None):
        self.t_lower = t_lower
        self.t_upper = t_upper
        self.last_sample = last_sample
        self.last_t = last_t
        super().__init__(message)
