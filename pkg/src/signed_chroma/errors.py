"""Exception hierarchy shared by all modules."""


class SignedChromaError(Exception):
    """Base class for errors raised by this package."""


class BudgetExceeded(SignedChromaError):
    """An enumeration or recursion would exceed its configured size cap."""


class InexactDivision(SignedChromaError, ArithmeticError):
    """A polynomial division left a remainder or produced non-integral coefficients."""


class InterpolationError(SignedChromaError, ValueError):
    """Interpolated coefficients were non-integral or had the wrong degree."""


class ModeMismatch(SignedChromaError, ValueError):
    """The coloring mode is incompatible with the input (parity or signs)."""


class GraphFormatError(SignedChromaError, ValueError):
    """A signed edge list could not be parsed."""
