"""Exception types shared across the package."""


class GenusRepError(Exception):
    """Base class for all package-specific errors."""


class ParameterRangeError(GenusRepError, ValueError):
    """A surface parameter is outside its admissible range."""


class ConstraintError(GenusRepError, ValueError):
    """A construction precondition (a named inequality) is violated."""

    def __init__(self, inequality: str, message: str = ""):
        self.inequality = inequality
        super().__init__(message or f"constraint violated: {inequality}")


class ExistenceError(GenusRepError, RuntimeError):
    """A root or solution that the construction needs does not exist."""


class IncompatibleParametersError(GenusRepError, ValueError):
    """Two parameter sets cannot be related by the rescaling isomorphism."""


class ConvergenceError(GenusRepError, RuntimeError):
    """An iterative refinement failed to converge within its iteration cap."""


class SchemaError(GenusRepError, ValueError):
    """A serialized file does not conform to the expected schema."""


class EmptyIsosurfaceError(GenusRepError, RuntimeError):
    """The sampled grid does not intersect the level set."""
