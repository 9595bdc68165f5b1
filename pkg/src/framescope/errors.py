"""Exception types shared across the package."""


class FramescopeError(Exception):
    """Base class for all framescope errors."""


class ShapeError(FramescopeError, ValueError):
    """Operands have incompatible dimensions."""


class DomainError(FramescopeError, ValueError):
    """Input lies outside the mathematical domain of an operation."""


class ConvergenceError(FramescopeError, RuntimeError):
    """An iterative method hit its iteration cap.

    ``estimate`` carries the best available (partial) result.
    """

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class ScaleError(FramescopeError, OverflowError):
    """A quantity left the double-precision range; rescale the input."""
