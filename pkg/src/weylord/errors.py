"""Exception hierarchy shared by the whole package."""


class WeylordError(Exception):
    """Base class for all errors raised by this package."""


class InputError(WeylordError):
    """Malformed input: file syntax, unknown keys, bad command lines."""


class DomainError(WeylordError):
    """Structurally valid input that violates a mathematical precondition."""
