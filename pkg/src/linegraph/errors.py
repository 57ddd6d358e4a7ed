"""Exception types shared across the package."""

import os


class LineGraphError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(LineGraphError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SelfLoopError(ParseError):
    pass


class CapExceeded(LineGraphError):
    """Raised when an exhaustive search would exceed its configured size cap."""

    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class NotALineGraph(LineGraphError):
    def __init__(self, message, component=None):
        self.component = component
        super().__init__(message)


class InvalidStructure(LineGraphError, ValueError):
    """A decomposition or relation failed validation; carries the violation."""

    def __init__(self, violation):
        self.violation = violation
        super().__init__(str(violation))


class NotALineGraphIsomorphism(LineGraphError, ValueError):
    pass


def resolve_cap(default):
    """Return ``default`` unless the LINEGRAPH_CAP environment variable overrides it."""
    raw = os.environ.get("LINEGRAPH_CAP")
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"LINEGRAPH_CAP must be an integer, got {raw!r}") from None
