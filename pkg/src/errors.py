class HeawoodError(Exception):
    """Base class for errors raised by the certificate library."""


class InputError(HeawoodError, ValueError):
    """A precondition on an argument was violated."""


class PermParseError(InputError):
    pass


class ResourceLimitError(HeawoodError):
    """A configured size bound was exceeded."""
