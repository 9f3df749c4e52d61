"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the domain where a formula or series is valid."""


class SeriesConvergenceError(ArithmeticError):
    """A convergent series did not reach its tail bound within the term cap."""


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to converge.

    ``estimates`` holds the last two estimates of the offending panel.
    """

    def __init__(self, message, estimates=(None, None)):
        super().__init__(message)
        self.estimates = estimates
