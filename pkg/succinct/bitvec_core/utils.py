"""Static rank/select primitives over immutable bit sequences.

Index conventions are fixed and every other module depends on them:

* ``rank(b, i, s)`` counts ``b`` in the prefix of length ``i`` (0-based,
  saturating at ``len(s)``).
* ``select(b, i, s)`` returns the 0-based index of the ``i``-th ``b`` plus
  one, ``0`` for ``i == 0`` and ``len(s) + 1`` when there are fewer than
  ``i`` occurrences.
"""

import logging
import re
from typing import Iterable, Optional

import numpy as np

import config
from ..errors import BitParseError, BoundsError
from ..models import BitSeq, RankIndex

logger = logging.getLogger(__name__)

_WHITESPACE = re.compile(r"\s+")


def to_bitseq(bits: Iterable) -> BitSeq:
    """Normalise any iterable of truthy values to a tuple of bools."""
    return tuple(bool(b) for b in bits)


def parse_bits(text: str) -> BitSeq:
    """Read the ASCII bit format; whitespace between groups is ignored."""
    compact = _WHITESPACE.sub("", text)
    for pos, ch in enumerate(compact):
        if ch not in "01":
            raise BitParseError(f"unexpected character {ch!r} at offset {pos}")
    return tuple(ch == "1" for ch in compact)


def format_bits(s: Iterable[bool], group: Optional[int] = None) -> str:
    text = "".join("1" if b else "0" for b in s)
    if not group:
        return text
    return " ".join(text[k:k + group] for k in range(0, len(text), group))


def count(b: bool, s: BitSeq) -> int:
    return s.count(bool(b))


def access(s: BitSeq, i: int) -> bool:
    if not 0 <= i < len(s):
        raise IndexError(f"bit index {i} out of range for length {len(s)}")
    return s[i]


def rank(b: bool, i: int, s: BitSeq) -> int:
    """Number of ``b`` among the first ``i`` bits of ``s``."""
    return s[:max(i, 0)].count(bool(b))


def select(b: bool, i: int, s: BitSeq) -> int:
    """Position (from one) of the ``i``-th ``b`` in ``s``."""
    if i <= 0:
        return 0
    b = bool(b)
    seen = 0
    for pos, x in enumerate(s, 1):
        if x == b:
            seen += 1
            if seen == i:
                return pos
    return len(s) + 1


def succ(b: bool, s: BitSeq, y: int) -> int:
    """Position (from one) of the first ``b`` at or after position ``y``."""
    return select(b, rank(b, y - 1, s) + 1, s)


def pred(b: bool, s: BitSeq, y: int) -> int:
    """Position (from one) of the last ``b`` at or before position ``y``."""
    return select(b, rank(b, y, s), s)


def build_rank_index(s: BitSeq, block_size: Optional[int] = None) -> RankIndex:
    """Precompute cumulative popcounts at every ``block_size`` boundary.

    ``block_counts[k] == rank(1, k * block_size, s)`` for every boundary
    ``k`` inside the sequence.
    """

    if block_size is None:
        block_size = getattr(config, "RANK_BLOCK_SIZE", 512)
    if block_size < 1:
        raise BoundsError(f"block_size must be at least 1, got {block_size}")
    s = to_bitseq(s)
    full = len(s) // block_size
    arr = np.fromiter(s, dtype=np.uint8, count=len(s))
    per_block = arr[: full * block_size].reshape(full, block_size).sum(axis=1, dtype=np.int64)
    counts = np.zeros(full + 1, dtype=np.int64)
    counts[1:] = np.cumsum(per_block)
    logger.debug("rank index over %d bits: %d blocks of %d", len(s), full, block_size)
    return RankIndex(source=s, block_size=block_size, block_counts=counts)


def index_rank(index: RankIndex, b: bool, i: int) -> int:
    """``rank`` answered from the directory plus one in-block scan."""
    i = min(max(i, 0), index.source_length)
    k = i // index.block_size
    start = k * index.block_size
    ones = int(index.block_counts[k]) + sum(index.source[start:i])
    return ones if b else i - ones


def index_select(index: RankIndex, b: bool, i: int) -> int:
    """``select`` via binary search on the directory, then an in-block scan."""
    if i <= 0:
        return 0
    counts = index.block_counts
    if not b:
        counts = np.arange(len(counts), dtype=np.int64) * index.block_size - counts
    k = int(np.searchsorted(counts, i, side="left")) - 1
    start = k * index.block_size
    remaining = i - int(counts[k])
    found = select(b, remaining, index.source[start:])
    if found > index.source_length - start:
        return index.source_length + 1
    return start + found
