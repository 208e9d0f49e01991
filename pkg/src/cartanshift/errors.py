"""Exception types shared across the package."""


class CartanShiftError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(CartanShiftError):
    pass


class CompositionNotZero(CartanShiftError):
    pass


class SingularMatrix(CartanShiftError):
    pass


class NotMonomial(CartanShiftError):
    pass


class NotRealizable(CartanShiftError):
    """A per-degree dimension vector is not the Hilbert function of an ideal."""


class NotStable(CartanShiftError):
    pass


class NotSquarefree(CartanShiftError):
    pass


class AmbientTooSmall(CartanShiftError):
    """A stretched monomial needs more variables than the ambient ring has."""


class GenericityFailure(CartanShiftError):
    """Independent random coordinate changes disagreed after resampling."""


class StabilityFailure(CartanShiftError):
    """A computed generic initial ideal is not strongly stable."""


class RouteMismatch(CartanShiftError):
    """Two independent computations of the same quantity disagree."""


class OracleDisagreement(CartanShiftError):
    """A primary predicate and its independent oracle disagree."""


class InvariantViolation(CartanShiftError):
    """A postcondition that holds by theory failed on a computed value."""
