"""Shared exception types."""


class SingularValueError(ArithmeticError):
    """Inversion of a value whose magnitude is below the zero threshold."""


class DomainError(ValueError):
    """Argument outside the open unit ball or another required domain."""


class PreconditionError(ValueError):
    """Structured input does not satisfy a documented precondition."""


class ConversionError(RuntimeError):
    """An iterative conversion failed to converge."""
