"""Exception types shared across the solvers."""


class ConvergenceError(RuntimeError):
    """An iterative solver did not reach its tolerance within the iteration cap."""

    def __init__(self, message, residual=None, iterations=None):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations


class InfeasibilityError(RuntimeError):
    """A duality or feasibility condition failed (e.g. power allocation unstable)."""


class StallError(RuntimeError):
    """Backtracking shrank the step size past the cap without an accepted ascent step."""

    def __init__(self, message, iteration=None, shrinks=None):
        super().__init__(message)
        self.iteration = iteration
        self.shrinks = shrinks


class DegenerateGradientError(RuntimeError):
    """The implicit-function denominator vanished; the gradient is undefined here."""
