"""Exceptions raised by the succinct package."""

from typing import Optional


class SuccinctError(Exception):
    """Base class for every error raised by this package."""


class BitParseError(SuccinctError, ValueError):
    """Text could not be read as a sequence of '0'/'1' characters."""


class TreeParseError(SuccinctError, ValueError):
    """Parenthesized tree text is malformed."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class InvalidPathError(SuccinctError, IndexError):
    """A path does not lead to a node of the tree."""


class InvalidPositionError(SuccinctError, IndexError):
    """A bit index is not the position of a node in a LOUDS encoding."""


class LabelError(SuccinctError, ValueError):
    """Node labels are missing or do not match the node count."""


class DTreeIndexError(SuccinctError, IndexError):
    """Index out of range for a dynamic bit vector."""


class BoundsError(SuccinctError, ValueError):
    """Leaf size bounds or block sizes are unusable."""


class ScriptError(SuccinctError, ValueError):
    """An op script line could not be parsed or executed."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class VerificationError(SuccinctError, AssertionError):
    """A result diverged from the reference oracle."""
