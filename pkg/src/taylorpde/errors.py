"""Exception hierarchy shared across the package.

Everything raised on purpose derives from TaylorPdeError so callers can
distinguish library failures from programming mistakes.  Parse-time
problems carry source coordinates; numerical problems carry enough context
to report what went wrong without re-running the computation.
"""


class TaylorPdeError(Exception):
    """Base class for all errors raised by this package."""


class TruncationError(TaylorPdeError):
    """A series operation asked for more orders than its inputs carry."""


class DimensionMismatchError(TaylorPdeError):
    """State vector length does not match the number of system fields."""


class ParseError(TaylorPdeError):
    """Source text for a system could not be parsed.

    Carries 1-based line and column of the offending token when known.
    """

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        if line is not None:
            where = f"line {line}" if col is None else f"line {line}, column {col}"
            message = f"{where}: {message}"
        super().__init__(message)
        self.line = line
        self.col = col


class UnknownFieldError(ParseError):
    """An expression referenced a name with no defining equation."""


class DuplicateEquationError(ParseError):
    """Two equations define the same field."""


class UnsupportedDerivativeError(ParseError):
    """A derivative outside the supported x-only, field-only form."""


class DegenerateSystemError(TaylorPdeError):
    """Rational fit rejected: the coefficient system is singular or
    numerically indistinguishable from singular."""


class InsufficientCoefficientsError(TaylorPdeError):
    """Too few series coefficients for the requested rational fit."""


class InsufficientDataError(TaylorPdeError):
    """Too few usable coefficient ratios to estimate a radius."""


class PoleEvaluationError(TaylorPdeError):
    """Rational approximant evaluated where its denominator vanishes."""


class DegenerateWaveError(TaylorPdeError):
    """Wave parameters admit no finite convergence radius."""


class ConfigError(TaylorPdeError):
    """Invalid experiment configuration or command-line input."""
