"""Exception types shared across the package."""


class QueendomError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgument(QueendomError, ValueError):
    pass


class UnsupportedBoard(QueendomError, ValueError):
    """Raised when an operation is only defined for a subset of boards (e.g. n >= 4)."""


class ResourceLimit(QueendomError, RuntimeError):
    """A configured memory, node or time budget was exceeded.

    ``lower`` and ``upper`` carry whatever bounds were known when the limit hit.
    """

    def __init__(self, message: str, lower: int | None = None, upper: int | None = None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


class ParseError(QueendomError, ValueError):
    """Malformed input file; ``location`` names the offending field or line."""

    def __init__(self, message: str, location: str | None = None):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location
