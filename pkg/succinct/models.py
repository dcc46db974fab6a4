"""Data types shared by the bit vector, LOUDS and dynamic vector modules."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional, Tuple, Union

import numpy as np

import config
from .errors import BoundsError

BitSeq = Tuple[bool, ...]
Path = Tuple[int, ...]
Meta = Tuple[int, int]


@dataclass(frozen=True)
class Tree:
    """Arbitrarily-branching labeled tree; a leaf has no children."""

    label: Any
    children: Tuple["Tree", ...] = ()

    def __repr__(self) -> str:
        if not self.children:
            return f"Tree({self.label!r})"
        return f"Tree({self.label!r}, {list(self.children)!r})"


Forest = Tuple[Tree, ...]


class Color(Enum):
    RED = "red"
    BLACK = "black"


RED = Color.RED
BLACK = Color.BLACK


@dataclass(frozen=True)
class Leaf:
    """Flat bit array stored at the bottom of a dynamic bit vector tree."""

    arr: BitSeq = ()

    def __len__(self) -> int:
        return len(self.arr)

    @property
    def ones(self) -> int:
        return sum(self.arr)


@dataclass(frozen=True)
class Node:
    """Red-black node; ``num``/``ones`` describe the left subtree."""

    color: Color
    left: "DTree"
    num: int
    ones: int
    right: "DTree"

    @property
    def meta(self) -> Meta:
        return (self.num, self.ones)


DTree = Union[Node, Leaf]


@dataclass(frozen=True)
class SizeBounds:
    """Leaf size bounds: every leaf holds ``low <= size < high`` bits.

    ``high >= 2 * low`` so that a leaf merged from two minimal leaves, minus
    the deleted bit, stays below ``high``.
    """

    low: int
    high: int
    w: Optional[int] = None

    def __post_init__(self) -> None:
        if self.low < 1:
            raise BoundsError(f"low must be at least 1, got {self.low}")
        if self.high < 2 * self.low:
            raise BoundsError(
                f"high must be at least 2 * low ({2 * self.low}), got {self.high}"
            )

    @classmethod
    def from_word_size(cls, w: int) -> "SizeBounds":
        return cls(low=w * w // 2, high=w * w * 2, w=w)

    @classmethod
    def from_config(cls) -> "SizeBounds":
        low = getattr(config, "LEAF_LOW", None)
        high = getattr(config, "LEAF_HIGH", None)
        if low is not None and high is not None:
            return cls(low=low, high=high, w=getattr(config, "WORD_SIZE", None))
        return cls.from_word_size(getattr(config, "WORD_SIZE", 64))

    @classmethod
    def parse(cls, text: str) -> "SizeBounds":
        """Read ``"low,high"`` as used by the ``--bounds`` flag."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise BoundsError(f"bounds must look like LOW,HIGH, got {text!r}")
        return cls(low=int(parts[0]), high=int(parts[1]))


@dataclass(frozen=True)
class DeletedDTree:
    """Result of a deletion step.

    ``down`` is set when the black-height of ``tree`` dropped by one;
    ``deleted`` is the (num, ones) contribution of the removed bit.
    """

    tree: DTree
    down: bool
    deleted: Meta


@dataclass(frozen=True, eq=False)
class RankIndex:
    """One-level rank directory: popcount before every block boundary."""

    source: BitSeq
    block_size: int
    block_counts: np.ndarray = field(repr=False)

    @property
    def source_length(self) -> int:
        return len(self.source)

    @property
    def total_ones(self) -> int:
        return int(self.block_counts[-1]) + sum(
            self.source[(len(self.block_counts) - 1) * self.block_size:]
        )
