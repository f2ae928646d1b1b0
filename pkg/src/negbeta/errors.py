"""Exception hierarchy. Class names double as the error names shown by the CLI."""


class NegBetaError(Exception):
    """Base class for every domain error raised by the library."""

    @property
    def name(self) -> str:
        return type(self).__name__


class MalformedSpec(NegBetaError, ValueError):
    pass


class ConstraintViolation(NegBetaError, ValueError):
    pass


class NotQuadratic(NegBetaError):
    pass


class NotClassA(NegBetaError):
    pass


class OutOfDomain(NegBetaError, ValueError):
    pass


class UndecidableDigit(NegBetaError):
    """An interval decision straddled a boundary at the working precision."""


class NotEventuallyPeriodicWithinBudget(NegBetaError):
    pass


class PatternNotMatched(NegBetaError):
    """The add-one rewriting met a configuration outside its case list."""


class BudgetExceeded(NegBetaError):
    pass


class KZero(NegBetaError):
    pass
