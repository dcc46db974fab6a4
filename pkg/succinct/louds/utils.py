"""Level-order traversals, LOUDS encoding and rank/select navigation.

A node is addressed two ways: by a path of 0-based child indices from the
root, and by its position in the LOUDS bits, the offset of the first bit of
its unary code ``1^k 0``. ``louds_position`` converts the first into the
second; ``louds_children``, ``louds_child`` and ``louds_parent`` navigate on
positions with rank/select alone.
"""

import logging
import re
from itertools import chain
from typing import Any, Callable, List, Optional, Sequence, Tuple, TypeVar

from ..bitvec_core.utils import (
    build_rank_index,
    format_bits,
    index_rank,
    index_select,
    pred,
    rank,
    select,
    succ,
)
from ..errors import InvalidPathError, InvalidPositionError, LabelError, TreeParseError
from ..models import BitSeq, Forest, Path, Tree

logger = logging.getLogger(__name__)

B = TypeVar("B")
LevelSeq = List[List[Any]]


def leaf(label: Any) -> Tree:
    return Tree(label)


def node(label: Any, *children: Tree) -> Tree:
    return Tree(label, tuple(children))


def with_super_root(t: Tree, label: Any = None) -> Tree:
    """Hang ``t`` under an anonymous root, giving the classic ``10`` prefix."""
    return Tree(label, (t,))


def children_of_node(t: Tree) -> Forest:
    return t.children


def children_of_forest(f: Sequence[Tree]) -> Forest:
    return tuple(chain.from_iterable(t.children for t in f))


def height(t: Tree) -> int:
    """A single leaf has height 1."""
    levels = 0
    s: Forest = (t,)
    while s:
        levels += 1
        s = children_of_forest(s)
    return levels


def number_of_nodes(t: Tree) -> int:
    total = 0
    stack = [t]
    while stack:
        node = stack.pop()
        total += 1
        stack.extend(node.children)
    return total


def lo_traversal(f: Callable[[Tree], B], t: Tree) -> List[B]:
    """Breadth-first images of the nodes, one forest level at a time."""
    out: List[B] = []
    s: Forest = (t,)
    while s:
        out.extend(f(x) for x in s)
        s = children_of_forest(s)
    return out


def mzip(l: LevelSeq, r: LevelSeq) -> LevelSeq:
    """Concatenate corresponding levels; the longer tail is kept as is."""
    zipped = [list(a) + list(b) for a, b in zip(l, r)]
    tail = l[len(r):] if len(l) > len(r) else r[len(l):]
    return zipped + [list(level) for level in tail]


def level_traversal(f: Callable[[Tree], B], t: Tree) -> LevelSeq:
    """Fold ``mzip`` over the children, right to left, below ``[[f(t)]]``.

    The fold runs on an explicit stack: a node's levels are complete once
    all of its children have been folded in.
    """
    # frame: node, levels folded so far from its rightmost children, next child
    stack: List[Tuple[Tree, LevelSeq, int]] = [(t, [], len(t.children) - 1)]
    done: LevelSeq = []
    while stack:
        node, below, k = stack.pop()
        if k >= 0:
            stack.append((node, below, k - 1))
            child = node.children[k]
            stack.append((child, [], len(child.children) - 1))
            continue
        done = [[f(node)]] + below
        if stack:
            parent, acc, j = stack.pop()
            stack.append((parent, mzip(done, acc), j))
    return done


def level_traversal_cat(f: Callable[[Tree], B], t: Tree, acc: Optional[LevelSeq] = None) -> LevelSeq:
    """``mzip(level_traversal(f, t), acc)``, filled in level by level."""
    out = [list(level) for level in (acc or [])]
    s: Forest = (t,)
    depth = 0
    while s:
        images = [f(x) for x in s]
        if depth < len(out):
            out[depth] = images + out[depth]
        else:
            out.append(images)
        depth += 1
        s = children_of_forest(s)
    return out


def lo_traversal_st(f: Callable[[Tree], B], t: Tree) -> List[B]:
    return [x for level in level_traversal_cat(f, t) for x in level]


def node_description(s: Sequence[Tree]) -> BitSeq:
    return (True,) * len(s) + (False,)


def children_description(t: Tree) -> BitSeq:
    return node_description(t.children)


def louds_encode(t: Tree) -> BitSeq:
    """No ``10`` super-root prefix is added; see ``with_super_root``."""
    return tuple(chain.from_iterable(lo_traversal_st(children_description, t)))


# -- paths -------------------------------------------------------------------


def valid_position(t: Tree, p: Sequence[int]) -> bool:
    current = t
    for step in p:
        if not 0 <= step < len(current.children):
            return False
        current = current.children[step]
    return True


def subtree(t: Tree, p: Sequence[int]) -> Tree:
    current = t
    for depth, step in enumerate(p):
        if not 0 <= step < len(current.children):
            raise InvalidPathError(
                f"path {list(p)} is invalid: step {depth} asks for child {step} "
                f"of a node with {len(current.children)} children"
            )
        current = current.children[step]
    return current


def children(t: Tree, p: Sequence[int]) -> int:
    return len(subtree(t, p).children)


def _lo_walk(f: Callable[[Tree], B], s: Sequence[Tree], p: Sequence[int]) -> Tuple[List[B], Forest]:
    # Queue front is the node reached so far; each step outputs the whole
    # queue plus the first n children of the front node.
    out: List[B] = []
    queue: Forest = tuple(s)
    for n in p:
        if not queue:
            break
        front, rest = queue[0], queue[1:]
        fs, ls = front.children[:n], front.children[n:]
        out.extend(f(x) for x in queue + fs)
        queue = ls + children_of_forest(rest + fs)
    return out, queue


def lo_traversal_lt(f: Callable[[Tree], B], s: Sequence[Tree], p: Sequence[int]) -> List[B]:
    """Level-order traversal of the nodes preceding path ``p``."""
    return _lo_walk(f, s, p)[0]


def lo_fringe(s: Sequence[Tree], p: Sequence[int]) -> Forest:
    """Queue left after walking ``p``: it generates the rest of the traversal."""
    return _lo_walk(lambda x: x, s, p)[1]


def lo_index(s: Sequence[Tree], p: Sequence[int]) -> int:
    return len(lo_traversal_lt(lambda x: x, s, p))


def louds_lt(s: Sequence[Tree], p: Sequence[int]) -> BitSeq:
    return tuple(chain.from_iterable(lo_traversal_lt(children_description, s, p)))


def louds_position(s: Sequence[Tree], p: Sequence[int]) -> int:
    return len(louds_lt(s, p))


# -- raw navigation formulas (total, unchecked) -------------------------------


def louds_children(bits: BitSeq, v: int) -> int:
    return succ(False, bits, v + 1) - (v + 1)


def louds_child(bits: BitSeq, v: int, i: int) -> int:
    return select(False, rank(True, v + i, bits) + 1, bits)


def louds_parent(bits: BitSeq, v: int) -> int:
    j = select(True, rank(False, v, bits), bits)
    return pred(False, bits, j)


def louds_label(t: Tree, v: int) -> Any:
    """Label of the node at LOUDS position ``v`` of ``louds_encode(t)``."""
    labels = lo_traversal_st(lambda x: x.label, t)
    return labels[rank(False, v, louds_encode(t))]


class LoudsTree:
    """LOUDS bits with checked navigation.

    Positions are validated before the formulas run; anything that is not
    the start of a node's unary code raises ``InvalidPositionError``.
    Queries go through a rank directory over the bits.
    """

    root = 0

    def __init__(self, bits: BitSeq, labels: Optional[Sequence[Any]] = None, block_size: Optional[int] = None) -> None:
        self.bits = tuple(bits)
        self.labels = list(labels) if labels is not None else None
        self.index = build_rank_index(self.bits, block_size)
        self.nodes = index_rank(self.index, False, len(self.bits))
        if self.labels is not None and len(self.labels) != self.nodes:
            raise LabelError(f"{len(self.labels)} labels for {self.nodes} nodes")

    @classmethod
    def from_tree(cls, t: Tree, super_root: bool = False, block_size: Optional[int] = None) -> "LoudsTree":
        if super_root:
            t = with_super_root(t)
        labels = lo_traversal_st(lambda x: x.label, t)
        return cls(louds_encode(t), labels, block_size)

    def __len__(self) -> int:
        return self.nodes

    def __str__(self) -> str:
        return format_bits(self.bits)

    def is_position(self, v: int) -> bool:
        if not 0 <= v < len(self.bits):
            return False
        return v == 0 or not self.bits[v - 1]

    def _check(self, v: int) -> None:
        if not self.is_position(v):
            raise InvalidPositionError(f"{v} is not a node position in {len(self.bits)} bits")

    def _select(self, b: bool, i: int) -> int:
        return index_select(self.index, b, i)

    def _rank(self, b: bool, i: int) -> int:
        return index_rank(self.index, b, i)

    def children(self, v: int) -> int:
        self._check(v)
        return self._select(False, self._rank(False, v) + 1) - (v + 1)

    def child(self, v: int, i: int) -> int:
        count = self.children(v)
        if not 0 <= i < count:
            raise InvalidPositionError(f"node {v} has {count} children, no child {i}")
        return self._select(False, self._rank(True, v + i) + 1)

    def parent(self, v: int) -> int:
        self._check(v)
        if v == self.root:
            raise InvalidPositionError("the root has no parent")
        j = self._select(True, self._rank(False, v))
        return self._select(False, self._rank(False, j))

    def index_of(self, v: int) -> int:
        """Level-order index of the node at position ``v``."""
        self._check(v)
        return self._rank(False, v)

    def label(self, v: int) -> Any:
        if self.labels is None:
            raise LabelError("this encoding carries no labels")
        return self.labels[self.index_of(v)]

    def position_of(self, p: Sequence[int]) -> int:
        v = self.root
        for step in p:
            try:
                v = self.child(v, step)
            except InvalidPositionError as exc:
                raise InvalidPathError(f"path {list(p)} is invalid: {exc}") from exc
        return v

    def path_of(self, v: int) -> Path:
        self._check(v)
        steps: List[int] = []
        while v != self.root:
            j = self._select(True, self._rank(False, v))
            u = self._select(False, self._rank(False, j))
            steps.append(j - 1 - u)
            v = u
        return tuple(reversed(steps))

    def positions(self) -> List[int]:
        return [0] + [k + 1 for k, b in enumerate(self.bits[:-1]) if not b]


# -- text format -------------------------------------------------------------

_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def parse_tree(text: str) -> Tree:
    """Read ``(label child*)``; whitespace between tokens is free."""
    tokens = []
    for lineno, line in enumerate(text.splitlines(), 1):
        for m in _TOKEN.finditer(line):
            tokens.append((m.group(), lineno, m.start() + 1))
    if not tokens:
        raise TreeParseError("empty input", 1, 1)

    # stack of [label, children] for open nodes
    stack: List[list] = []
    result: Optional[Tree] = None
    pos = 0
    while pos < len(tokens):
        tok, line, col = tokens[pos]
        if result is not None:
            raise TreeParseError(f"unexpected {tok!r} after the tree ended", line, col)
        if tok == "(":
            if pos + 1 >= len(tokens) or tokens[pos + 1][0] in "()":
                raise TreeParseError("expected a label after '('", line, col + 1)
            stack.append([tokens[pos + 1][0], []])
            pos += 2
            continue
        if tok == ")":
            if not stack:
                raise TreeParseError("unbalanced ')'", line, col)
            label, kids = stack.pop()
            done = Tree(label, tuple(kids))
            if stack:
                stack[-1][1].append(done)
            else:
                result = done
        else:
            raise TreeParseError(f"unexpected label {tok!r}; children must be parenthesized", line, col)
        pos += 1
    if result is None:
        tok, line, col = tokens[-1]
        raise TreeParseError("unterminated tree, missing ')'", line, col + len(tok))
    return result


def format_tree(t: Tree) -> str:
    parts: List[str] = []
    stack: List[Any] = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
            continue
        parts.append(f"({item.label}")
        stack.append(")")
        for child in reversed(item.children):
            stack.extend((child, " "))
    return "".join(parts)
