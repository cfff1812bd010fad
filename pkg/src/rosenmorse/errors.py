"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the region where a formula is defined."""


class QuadratureError(ArithmeticError):
    """Adaptive quadrature exhausted its node budget before reaching ``tol``.

    The best available estimate is kept on the exception so callers can
    report it.
    """

    def __init__(self, message, value, abs_error_estimate, nodes_used):
        super().__init__(message)
        self.value = value
        self.abs_error_estimate = abs_error_estimate
        self.nodes_used = nodes_used


class DegenerateParameterError(ZeroDivisionError):
    """A Jacobi recurrence denominator vanished for the given parameters."""
