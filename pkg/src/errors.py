class IPFError(Exception):
    """Base class for every error raised by the library."""


class DomainError(IPFError, ValueError):
    """A value lies outside the set an operation is defined on."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class ArgumentError(IPFError, ValueError):
    """An operation was called with arguments that violate its precondition."""


class ParseError(IPFError, ValueError):
    """Malformed text encoding. `position` is a slash separated path into the input."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at {position})"
        super().__init__(message)
        self.position = position


class IntegerOverflowError(DomainError):
    """A value does not fit into a signed 64-bit integer."""
