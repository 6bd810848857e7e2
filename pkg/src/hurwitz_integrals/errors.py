"""Exception types raised by the library."""


class DomainError(ValueError):
    """An argument lies outside the domain of the function."""


class PoleError(DomainError):
    """Evaluation requested at (or too close to) a pole."""


class AccuracyError(ArithmeticError):
    """A numerical method failed to reach the requested accuracy.

    The best available estimate is kept on the exception so callers can
    decide whether it is good enough.
    """

    def __init__(self, message, estimate=None, error_estimate=None):
        super().__init__(message)
        self.estimate = estimate
        self.error_estimate = error_estimate


class NoClosedFormError(LookupError):
    """No closed form is known for the requested family/index/kernel."""
