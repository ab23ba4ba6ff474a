"""Exception hierarchy shared across the package."""


class PicubedError(Exception):
    """Base class for all errors raised by this package."""


class PrecisionOutOfRange(PicubedError):
    """Requested decimal precision is zero, negative, or above the cap."""


class PrecisionInsufficient(PicubedError):
    """The supplied context cannot support the requested digit target."""


class DomainError(PicubedError):
    """Argument outside the mathematical domain of a function."""


class DivisionByZeroField(ZeroDivisionError, PicubedError):
    """Division by the zero element of the quadratic field."""


class UnsupportedAbscissa(PicubedError):
    """No exact closed form is available for this abscissa."""


class AbscissaOutOfRange(PicubedError):
    """Bilateral-series abscissa outside the supported open interval."""


class DegenerateAbscissa(PicubedError):
    """Abscissa 1/2 makes the bilateral identity uninformative."""


class IndexBelowStart(PicubedError):
    """Term index precedes the first index of the series."""


class BudgetExceeded(PicubedError):
    """The term budget cannot certify the requested digit target."""

    def __init__(self, message: str, hint: str | None = None):
        super().__init__(message)
        self.hint = hint
