"""Naive ground truth for the property tests and the ``--verify`` modes.

Nothing here imports from the optimised modules: the scans, the queue
traversal and the path walking are written out again on purpose.
"""

from collections import deque
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple

from ..models import Tree


def oracle_count(b: bool, s: Sequence[bool]) -> int:
    total = 0
    for x in s:
        if bool(x) == bool(b):
            total += 1
    return total


def oracle_rank(b: bool, i: int, s: Sequence[bool]) -> int:
    """Cardinality of ``{k in [1, n] | k <= i and s_k == b}``."""
    total = 0
    for k in range(1, len(s) + 1):
        if k <= i and bool(s[k - 1]) == bool(b):
            total += 1
    return total


def oracle_select(b: bool, i: int, s: Sequence[bool]) -> int:
    """Least ``k <= n`` whose prefix holds ``i`` occurrences, else ``n + 1``."""
    seen = 0
    for k in range(len(s) + 1):
        if k > 0 and bool(s[k - 1]) == bool(b):
            seen += 1
        if seen == i:
            return k
    return len(s) + 1


def oracle_succ(b: bool, s: Sequence[bool], y: int) -> int:
    for idx in range(max(y - 1, 0), len(s)):
        if bool(s[idx]) == bool(b):
            return idx + 1
    return len(s) + 1


def oracle_pred(b: bool, s: Sequence[bool], y: int) -> int:
    for idx in range(min(y, len(s)) - 1, -1, -1):
        if bool(s[idx]) == bool(b):
            return idx + 1
    return 0


def insert1(s: Sequence[bool], b: bool, i: int) -> Tuple[bool, ...]:
    if not 0 <= i <= len(s):
        raise IndexError(f"insert position {i} out of range for length {len(s)}")
    out = list(s)
    out.insert(i, bool(b))
    return tuple(out)


def delete_at(s: Sequence[bool], i: int) -> Tuple[bool, ...]:
    if not 0 <= i < len(s):
        raise IndexError(f"delete position {i} out of range for length {len(s)}")
    out = list(s)
    del out[i]
    return tuple(out)


def update_at(s: Sequence[bool], i: int, b: bool) -> Tuple[bool, ...]:
    if not 0 <= i < len(s):
        raise IndexError(f"update position {i} out of range for length {len(s)}")
    out = list(s)
    out[i] = bool(b)
    return tuple(out)


class FlatVector:
    """Mutable list-backed bit vector mirroring the dynamic vector API."""

    def __init__(self, bits: Sequence[bool] = ()) -> None:
        self.bits: List[bool] = [bool(b) for b in bits]

    def __len__(self) -> int:
        return len(self.bits)

    def insert(self, i: int, b: bool) -> None:
        self.bits = list(insert1(self.bits, b, i))

    def delete(self, i: int) -> None:
        self.bits = list(delete_at(self.bits, i))

    def set(self, i: int) -> bool:
        changed = not self.access(i)
        self.bits = list(update_at(self.bits, i, True))
        return changed

    def clear(self, i: int) -> bool:
        changed = self.access(i)
        self.bits = list(update_at(self.bits, i, False))
        return changed

    def access(self, i: int) -> bool:
        if not 0 <= i < len(self.bits):
            raise IndexError(f"access position {i} out of range for length {len(self.bits)}")
        return self.bits[i]

    def rank(self, i: int) -> int:
        return oracle_rank(True, i, self.bits)

    def select0(self, k: int) -> int:
        return oracle_select(False, k, self.bits)

    def select1(self, k: int) -> int:
        return oracle_select(True, k, self.bits)


# -- trees -----------------------------------------------------------------


class Navigation(NamedTuple):
    children: int
    parent: Optional[Tuple[int, ...]]
    child_paths: List[Tuple[int, ...]]


def bfs_queue(t: Tree) -> List[Any]:
    """Labels in breadth-first order using an explicit FIFO queue."""
    out = []
    queue = deque([t])
    while queue:
        node = queue.popleft()
        out.append(node.label)
        queue.extend(node.children)
    return out


def oracle_walk(t: Tree, path: Sequence[int]) -> Tree:
    node = t
    for depth, step in enumerate(path):
        if not 0 <= step < len(node.children):
            raise IndexError(f"path {list(path)} leaves the tree at depth {depth}")
        node = node.children[step]
    return node


def tree_navigate(t: Tree, path: Sequence[int]) -> Navigation:
    node = oracle_walk(t, path)
    path = tuple(path)
    return Navigation(
        children=len(node.children),
        parent=path[:-1] if path else None,
        child_paths=[path + (k,) for k in range(len(node.children))],
    )


def oracle_louds(t: Tree) -> Tuple[bool, ...]:
    """LOUDS bits built with a queue: ``1`` per child then ``0`` per node."""
    out: List[bool] = []
    queue = deque([t])
    while queue:
        node = queue.popleft()
        out.extend([True] * len(node.children))
        out.append(False)
        queue.extend(node.children)
    return tuple(out)


def oracle_positions(t: Tree) -> Dict[Tuple[int, ...], int]:
    """Map every valid path to the offset of its node's unary code."""
    positions: Dict[Tuple[int, ...], int] = {}
    offset = 0
    queue = deque([((), t)])
    while queue:
        path, node = queue.popleft()
        positions[path] = offset
        offset += len(node.children) + 1
        for k, child in enumerate(node.children):
            queue.append((path + (k,), child))
    return positions
