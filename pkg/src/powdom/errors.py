"""Exception hierarchy shared by every powdom module."""

from __future__ import annotations


class PowdomError(Exception):
    """Base class for all library errors."""


class InvalidVertexError(PowdomError, ValueError):
    pass


class InvalidParameterError(PowdomError, ValueError):
    pass


class DisconnectedInputError(PowdomError, ValueError):
    """A connected-kind invariant was requested on a disconnected graph."""


class SizeLimitError(PowdomError):
    """The graph is larger than the exact solver is allowed to search."""


class NoFeasibleSetError(PowdomError):
    """No vertex subset satisfies the requested predicate (e.g. TDS of K_1)."""


class GraphFormatError(PowdomError, ValueError):
    """Malformed edge-list text; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ExprParseError(PowdomError, ValueError):
    """Malformed graph expression; ``pos`` is the 0-based offset of the problem."""

    def __init__(self, message: str, pos: int):
        self.pos = pos
        super().__init__(f"at position {pos}: {message}")
