"""Error hierarchy shared by the library and the CLI."""

from typing import Optional


class ExturanError(Exception):
    """Base error; `exit_code` is what the CLI exits with."""

    exit_code: int = 1


class DomainError(ExturanError, ValueError):
    """A parameter or precondition is outside the supported domain."""

    exit_code = 2


class InvalidBipartitionError(DomainError):
    """An edge joins two vertices of the same part."""

    def __init__(self, u: int, v: int, part: str):
        self.edge = (u, v)
        self.part = part
        super().__init__(f"edge ({u}, {v}) lies inside part {part}")


class ParseError(ExturanError, ValueError):
    """Malformed graph6 record or sidecar."""

    exit_code = 2

    def __init__(self, message: str, offset: Optional[int] = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class ScaleError(ExturanError):
    """Input exceeds an enumeration or solver budget."""

    exit_code = 4


class ConsistencyError(ExturanError, AssertionError):
    """An internal invariant failed. Never expected to fire."""

    exit_code = 5
