"""Exception hierarchy shared across the package."""


class GogmagogError(Exception):
    """Base class for all package-specific errors."""


class PreconditionError(GogmagogError, ValueError):
    """Input violates a documented precondition (bad shape, bad range)."""


class NotApplicableError(PreconditionError):
    """The requested formula is undefined for these parameters.

    Distinct from a plain precondition failure so callers can route the
    case to an alternative method instead of rejecting the input.
    """


class ResourceBudgetError(GogmagogError, RuntimeError):
    """A computation exceeded its configured term or variable budget."""

    def __init__(self, message, *, budget=None, needed=None):
        super().__init__(message)
        self.budget = budget
        self.needed = needed


class MalformedExpressionError(GogmagogError, ValueError):
    """A constant-term expression fails structural validation."""


class ExactDivisionError(GogmagogError, ArithmeticError):
    """An exact polynomial division left a nonzero remainder."""


class NonUnitError(GogmagogError, ArithmeticError):
    """Inversion was requested for a ring element that is not a unit."""
