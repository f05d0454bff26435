"""Exception types shared across the package."""


class ChTriangleError(Exception):
    """Base class for all package errors."""


class DomainError(ChTriangleError, ValueError):
    pass


class IsotropicArgument(DomainError):
    """A tance denominator vanished."""


class NotPolar(DomainError):
    """Point is not of positive type, so it is not the polar point of a complex geodesic."""


class UnsupportedAngle(DomainError):
    pass


class Inadmissible(DomainError):
    """Parameters violate 1 + 2 r1 r2 r3 t - (r1^2 + r2^2 + r3^2) <= 0."""


class DegenerateGram(DomainError):
    pass


class OutOfRange(DomainError):
    pass


class BadIndex(DomainError):
    pass


class StartNotLoxodromic(ChTriangleError):
    """W_B is not loxodromic at t = -1; the caller passed an inadmissible path."""


class NegativeSqrt(DomainError):
    pass


class VariableMismatch(ChTriangleError, ValueError):
    pass


class PlanUnsound(ChTriangleError):
    """A monotone plan step could not be certified."""

    def __init__(self, message, node=None):
        super().__init__(message)
        self.node = node


class UnknownClaim(ChTriangleError, KeyError):
    pass


class ScriptStepFailed(ChTriangleError):
    def __init__(self, step, detail=""):
        super().__init__(f"step {step!r} failed: {detail}" if detail else f"step {step!r} failed")
        self.step = step
