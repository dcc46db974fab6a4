"""Dynamic bit vectors as red-black trees of flat leaves.

Every node stores ``num``/``ones``: the size and popcount of its left
subtree. ``dflatten`` gives the meaning of a tree; every query and update
below is defined by what it does to ``dflatten``.
"""

import logging
from itertools import chain
from typing import Iterator, List, Optional, Sequence, Tuple

from ..bitvec_core.utils import rank, select, to_bitseq
from ..errors import DTreeIndexError
from ..models import BLACK, RED, BitSeq, Color, DeletedDTree, DTree, Leaf, Meta, Node, SizeBounds
from .balance import (
    balance_left,
    balance_left_deleted,
    balance_right,
    balance_right_deleted,
    blacken,
    leaf_meta,
    make_node,
    minus,
    plus,
)

logger = logging.getLogger(__name__)


def empty() -> Leaf:
    return Leaf(())


def iter_leaves(t: DTree) -> Iterator[Leaf]:
    """Leaves from left to right."""
    stack: List[DTree] = [t]
    while stack:
        top = stack.pop()
        if isinstance(top, Leaf):
            yield top
        else:
            stack.append(top.right)
            stack.append(top.left)


def dflatten(t: DTree) -> BitSeq:
    return tuple(chain.from_iterable(leaf.arr for leaf in iter_leaves(t)))


# -- queries -----------------------------------------------------------------


def dsize(t: DTree) -> int:
    total = 0
    while isinstance(t, Node):
        total += t.num
        t = t.right
    return total + len(t.arr)


def dones(t: DTree) -> int:
    total = 0
    while isinstance(t, Node):
        total += t.ones
        t = t.right
    return total + sum(t.arr)


def measure(t: DTree) -> Meta:
    """(size, popcount) of the whole tree, read down the right spine."""
    return (dsize(t), dones(t))


def drank(t: DTree, i: int) -> int:
    """Number of ones among the first ``i`` bits."""
    acc = 0
    while isinstance(t, Node):
        if i < t.num:
            t = t.left
        else:
            acc += t.ones
            i -= t.num
            t = t.right
    return acc + rank(True, i, t.arr)


def drank0(t: DTree, i: int) -> int:
    i = min(max(i, 0), dsize(t))
    return i - drank(t, i)


def dselect1(t: DTree, k: int) -> int:
    if k <= 0:
        return 0
    base = 0
    while isinstance(t, Node):
        if k <= t.ones:
            t = t.left
        else:
            k -= t.ones
            base += t.num
            t = t.right
    return base + select(True, k, t.arr)


def dselect0(t: DTree, k: int) -> int:
    if k <= 0:
        return 0
    base = 0
    while isinstance(t, Node):
        zeros = t.num - t.ones
        if k <= zeros:
            t = t.left
        else:
            k -= zeros
            base += t.num
            t = t.right
    return base + select(False, k, t.arr)


def daccess(t: DTree, i: int) -> bool:
    size = dsize(t)
    if not 0 <= i < size:
        raise DTreeIndexError(f"access at {i} out of range for {size} bits")
    while isinstance(t, Node):
        if i < t.num:
            t = t.left
        else:
            i -= t.num
            t = t.right
    return t.arr[i]


# -- invariants --------------------------------------------------------------


def _wf(t: DTree, low: int, high: int) -> Optional[Meta]:
    if isinstance(t, Leaf):
        return leaf_meta(t) if low <= len(t.arr) < high else None
    left = _wf(t.left, low, high)
    if left is None or left != t.meta:
        return None
    right = _wf(t.right, low, high)
    if right is None:
        return None
    return plus(left, right)


def wf_dtree(t: DTree, low: int, high: int) -> bool:
    """Metadata matches the left subtrees and every leaf has ``low <= size < high``."""
    return _wf(t, low, high) is not None


def wf_check(t: DTree, bounds: SizeBounds, relaxed: bool = False) -> bool:
    """``relaxed`` lets a lone root leaf be smaller than ``bounds.low``."""
    if relaxed and isinstance(t, Leaf):
        return len(t.arr) < bounds.high
    return wf_dtree(t, bounds.low, bounds.high)


def _black_height(t: DTree, ctxt: Color) -> Optional[int]:
    if isinstance(t, Leaf):
        return 0
    if t.color is RED:
        if ctxt is RED:
            return None
        below = RED
    else:
        below = BLACK
    left = _black_height(t.left, below)
    if left is None or left != _black_height(t.right, below):
        return None
    return left + 1 if t.color is BLACK else left


def is_redblack(t: DTree, ctxt: Color, bh: int) -> bool:
    return _black_height(t, ctxt) == bh


def redblack_check(t: DTree) -> Optional[int]:
    """Black-height when ``t`` is red-black under a red context, else None."""
    return _black_height(t, RED)


def is_deleted_redblack(d: DeletedDTree, c: Color, bh: int) -> bool:
    if d.down:
        return is_redblack(d.tree, RED, max(bh - 1, 0))
    return is_redblack(d.tree, c, bh)


def depth(t: DTree) -> int:
    """Nodes on the longest root-to-leaf path, the leaf included."""
    if isinstance(t, Leaf):
        return 1
    return 1 + max(depth(t.left), depth(t.right))


def leaf_count(t: DTree) -> int:
    return sum(1 for _ in iter_leaves(t))


def leaf_sizes(t: DTree) -> List[int]:
    return [len(leaf.arr) for leaf in iter_leaves(t)]


# -- construction ------------------------------------------------------------


def _leaf_count_for(n: int, bounds: SizeBounds) -> int:
    fewest = -(-n // (bounds.high - 1))
    most = n // bounds.low
    target = n // ((bounds.low + bounds.high) // 2)
    return min(max(target, fewest), most)


def from_bitseq(bits: Sequence[bool], bounds: SizeBounds) -> DTree:
    """Balanced tree over ``bits`` with evenly filled leaves.

    Halving the leaf list puts every leaf at depth ``h`` or ``h + 1`` where
    ``h = floor(log2(leaves))``; nodes at depth ``h`` are red, the rest black.
    """

    bits = to_bitseq(bits)
    n = len(bits)
    if n < bounds.high:
        return Leaf(bits)
    k = _leaf_count_for(n, bounds)
    base, extra = divmod(n, k)
    leaves = []
    start = 0
    for j in range(k):
        size = base + (1 if j < extra else 0)
        leaves.append(Leaf(bits[start:start + size]))
        start += size
    red_depth = k.bit_length() - 1

    def build(lo: int, hi: int, level: int) -> Tuple[DTree, Meta]:
        if hi - lo == 1:
            return leaves[lo], leaf_meta(leaves[lo])
        mid = lo + (hi - lo + 1) // 2
        left, lmeta = build(lo, mid, level + 1)
        right, rmeta = build(mid, hi, level + 1)
        color = RED if level == red_depth else BLACK
        return make_node(color, left, lmeta, right), plus(lmeta, rmeta)

    tree, _ = build(0, k, 0)
    return tree


# -- insertion ---------------------------------------------------------------


def dins_leaf(s: BitSeq, b: bool, i: int, bounds: SizeBounds) -> DTree:
    """Insert into a leaf, splitting it in two once it reaches ``high``."""
    grown = s[:i] + (bool(b),) + s[i:]
    if len(grown) < bounds.high:
        return Leaf(grown)
    half = (len(grown) + 1) // 2
    left, right = Leaf(grown[:half]), Leaf(grown[half:])
    logger.debug("leaf of %d bits split into %d + %d", len(grown), len(left), len(right))
    return make_node(RED, left, leaf_meta(left), right)


def dins(t: DTree, b: bool, i: int, bounds: SizeBounds) -> DTree:
    """Insertion before the root is repainted; may return a red root."""
    if isinstance(t, Leaf):
        return dins_leaf(t.arr, b, i, bounds)
    if i < t.num:
        return balance_left(t.color, dins(t.left, b, i, bounds), (t.num + 1, t.ones + int(bool(b))), t.right)
    return balance_right(t.color, t.left, t.meta, dins(t.right, b, i - t.num, bounds))


def dinsert(t: DTree, b: bool, i: int, bounds: SizeBounds) -> DTree:
    size = dsize(t)
    if not 0 <= i <= size:
        raise DTreeIndexError(f"insert at {i} out of range for {size} bits")
    return blacken(dins(t, b, i, bounds))


# -- set / clear -------------------------------------------------------------


def _dupdate(t: DTree, i: int, b: bool) -> Tuple[DTree, bool]:
    if isinstance(t, Leaf):
        if t.arr[i] == b:
            return t, False
        return Leaf(t.arr[:i] + (b,) + t.arr[i + 1:]), True
    if i < t.num:
        left, changed = _dupdate(t.left, i, b)
        if not changed:
            return t, False
        return Node(t.color, left, t.num, t.ones + (1 if b else -1), t.right), True
    right, changed = _dupdate(t.right, i - t.num, b)
    if not changed:
        return t, False
    return Node(t.color, t.left, t.num, t.ones, right), True


def dupdate(t: DTree, i: int, b: bool) -> Tuple[DTree, bool]:
    """Write bit ``i``; the flag tells whether the bit actually changed."""
    size = dsize(t)
    if not 0 <= i < size:
        raise DTreeIndexError(f"update at {i} out of range for {size} bits")
    return _dupdate(t, i, bool(b))


def dset(t: DTree, i: int) -> Tuple[DTree, bool]:
    return dupdate(t, i, True)


def dclear(t: DTree, i: int) -> Tuple[DTree, bool]:
    return dupdate(t, i, False)


# -- deletion ----------------------------------------------------------------
#
# A leaf already at ``low`` bits cannot simply lose one. Its parent P has a
# sibling S of black-height 0, so S is either a leaf or a red node over two
# leaves (and then P is black). With L the short leaf:
#
#   S leaf, |S| > low        borrow S's bit next to L; shape unchanged
#   S leaf, |S| == low       merge L and S into one leaf replacing P;
#                            black-height drops iff P was black
#   S red over (A, B)        rotate so the leaf of S next to L becomes L's
#                            sibling under a red node, then borrow from it
#                            (|A| > low) or merge with it (|A| == low);
#                            the red node absorbs the change, P stays black
#
# The same table applies mirrored when L is the right child.


def _remove(arr: BitSeq, i: int) -> BitSeq:
    return arr[:i] + arr[i + 1:]


def _leaf_pair(color: Color, left: BitSeq, right: BitSeq) -> Node:
    return make_node(color, Leaf(left), (len(left), sum(left)), Leaf(right))


def _repair_left_leaf(t: Node, i: int, bounds: SizeBounds) -> DeletedDTree:
    arr = t.left.arr
    deleted = (1, int(arr[i]))
    rest = _remove(arr, i)
    s = t.right
    if isinstance(s, Leaf):
        if len(s.arr) > bounds.low:
            logger.debug("borrow first bit of right sibling")
            return DeletedDTree(_leaf_pair(t.color, rest + s.arr[:1], s.arr[1:]), False, deleted)
        logger.debug("merge leaf with right sibling")
        return DeletedDTree(Leaf(rest + s.arr), t.color is BLACK, deleted)
    if s.color is RED and isinstance(s.left, Leaf) and isinstance(s.right, Leaf):
        a = s.left.arr
        if len(a) > bounds.low:
            logger.debug("rotate, then borrow from the near leaf of a red sibling")
            inner: DTree = _leaf_pair(RED, rest + a[:1], a[1:])
        else:
            logger.debug("rotate, then merge with the near leaf of a red sibling")
            inner = Leaf(rest + a)
        inner_meta = (len(rest) + len(a), sum(rest) + sum(a))
        return DeletedDTree(make_node(t.color, inner, inner_meta, s.right), False, deleted)
    raise ValueError("sibling of a leaf must be a leaf or a red node over leaves; tree is not red-black")


def _repair_right_leaf(t: Node, i: int, bounds: SizeBounds) -> DeletedDTree:
    arr = t.right.arr
    deleted = (1, int(arr[i]))
    rest = _remove(arr, i)
    s = t.left
    if isinstance(s, Leaf):
        if len(s.arr) > bounds.low:
            logger.debug("borrow last bit of left sibling")
            return DeletedDTree(_leaf_pair(t.color, s.arr[:-1], s.arr[-1:] + rest), False, deleted)
        logger.debug("merge leaf with left sibling")
        return DeletedDTree(Leaf(s.arr + rest), t.color is BLACK, deleted)
    if s.color is RED and isinstance(s.left, Leaf) and isinstance(s.right, Leaf):
        b = s.right.arr
        if len(b) > bounds.low:
            logger.debug("rotate, then borrow from the near leaf of a red sibling")
            inner: DTree = _leaf_pair(RED, b[:-1], b[-1:] + rest)
        else:
            logger.debug("rotate, then merge with the near leaf of a red sibling")
            inner = Leaf(b + rest)
        return DeletedDTree(make_node(t.color, s.left, s.meta, inner), False, deleted)
    raise ValueError("sibling of a leaf must be a leaf or a red node over leaves; tree is not red-black")


def ddel(t: DTree, i: int, bounds: SizeBounds) -> DeletedDTree:
    if isinstance(t, Leaf):
        return DeletedDTree(Leaf(_remove(t.arr, i)), False, (1, int(t.arr[i])))
    if i < t.num:
        if isinstance(t.left, Leaf) and len(t.left.arr) <= bounds.low:
            return _repair_left_leaf(t, i, bounds)
        d = ddel(t.left, i, bounds)
        return balance_left_deleted(t.color, d, minus(t.meta, d.deleted), t.right)
    j = i - t.num
    if isinstance(t.right, Leaf) and len(t.right.arr) <= bounds.low:
        return _repair_right_leaf(t, j, bounds)
    d = ddel(t.right, j, bounds)
    return balance_right_deleted(t.color, t.left, t.meta, d)


def ddelete(t: DTree, i: int, bounds: SizeBounds) -> DTree:
    size = dsize(t)
    if not 0 <= i < size:
        raise DTreeIndexError(f"delete at {i} out of range for {size} bits")
    return blacken(ddel(t, i, bounds).tree)
