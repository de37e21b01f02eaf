"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class HomlabError(Exception):
    """Base class for every error raised by homlab."""


class Graph6Error(HomlabError, ValueError):
    """Malformed or unsupported graph6 input."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class SizeGuardError(HomlabError):
    """Input exceeds the size an exponential routine is willing to handle."""


class BudgetExceeded(HomlabError):
    """A search or enumeration ran past its configured work budget."""


class LoopDetected(HomlabError):
    """A quotient would create a self-loop; carries the offending block."""

    def __init__(self, block):
        self.block = tuple(sorted(block))
        super().__init__(f"block {self.block} contains an internal edge")


class InvalidDecomposition(HomlabError, ValueError):
    pass


class NotAHomomorphism(HomlabError, ValueError):
    pass


class InvalidPath(HomlabError, ValueError):
    pass


class ConsistencyError(HomlabError):
    """An internal cross-check failed; indicates a bug, never a user error."""
