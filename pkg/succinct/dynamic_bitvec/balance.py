"""Red-black rebalancing that keeps (num, ones) metadata exact.

Every rotation derives the metadata of the rebuilt nodes from the metadata
already stored in the nodes it moves; no subtree is flattened or walked.
"""

import logging

from ..models import BLACK, RED, Color, DeletedDTree, DTree, Leaf, Meta, Node

logger = logging.getLogger(__name__)


def plus(a: Meta, b: Meta) -> Meta:
    return (a[0] + b[0], a[1] + b[1])


def minus(a: Meta, b: Meta) -> Meta:
    return (a[0] - b[0], a[1] - b[1])


def leaf_meta(leaf: Leaf) -> Meta:
    return (len(leaf.arr), sum(leaf.arr))


def make_node(color: Color, left: DTree, meta: Meta, right: DTree) -> Node:
    return Node(color, left, meta[0], meta[1], right)


def is_red(t: DTree) -> bool:
    return isinstance(t, Node) and t.color is RED


def blacken(t: DTree) -> DTree:
    if isinstance(t, Node) and t.color is RED:
        return Node(BLACK, t.left, t.num, t.ones, t.right)
    return t


# -- insertion ---------------------------------------------------------------


def balance_left(c: Color, l: DTree, meta: Meta, r: DTree) -> Node:
    """Okasaki's balance for a left child that may carry a red-red pair.

    ``meta`` is the (num, ones) of ``l``.
    """

    if c is BLACK and is_red(l):
        if is_red(l.left):
            a = l.left
            return make_node(
                RED,
                make_node(BLACK, a.left, a.meta, a.right),
                l.meta,
                make_node(BLACK, l.right, minus(meta, l.meta), r),
            )
        if is_red(l.right):
            b = l.right
            left_size = plus(l.meta, b.meta)
            return make_node(
                RED,
                make_node(BLACK, l.left, l.meta, b.left),
                left_size,
                make_node(BLACK, b.right, minus(meta, left_size), r),
            )
    return make_node(c, l, meta, r)


def balance_right(c: Color, l: DTree, meta: Meta, r: DTree) -> Node:
    """Mirror of :func:`balance_left`; ``meta`` still describes ``l``."""

    if c is BLACK and is_red(r):
        if is_red(r.left):
            b = r.left
            return make_node(
                RED,
                make_node(BLACK, l, meta, b.left),
                plus(meta, b.meta),
                make_node(BLACK, b.right, minus(r.meta, b.meta), r.right),
            )
        if is_red(r.right):
            d = r.right
            return make_node(
                RED,
                make_node(BLACK, l, meta, r.left),
                plus(meta, r.meta),
                make_node(BLACK, d.left, d.meta, d.right),
            )
    return make_node(c, l, meta, r)


# -- deletion ----------------------------------------------------------------
#
# A DeletedDTree with ``down`` set is one black level short of its sibling.
# With L the short side and S its sibling the cases are:
#
#   L red                        repaint L black; done
#   S red                        rotate S up, fix the new red parent of L
#                                (never short again), root turns black
#   S black, far child red       rotate S up, far child black; done
#   S black, near child red      double rotation through the near child; done
#   S black, both children black S turns red; still short iff parent black


def _require_node(t: DTree) -> Node:
    if not isinstance(t, Node):
        raise ValueError("sibling of a shortened subtree must be a node; tree is not red-black")
    return t


def balance_left_deleted(c: Color, d: DeletedDTree, meta: Meta, r: DTree) -> DeletedDTree:
    """Rebuild a node whose left subtree went through a deletion.

    ``meta`` is the (num, ones) of ``d.tree``, already adjusted.
    """

    l = d.tree
    if not d.down:
        return DeletedDTree(make_node(c, l, meta, r), False, d.deleted)
    if is_red(l):
        return DeletedDTree(make_node(c, blacken(l), meta, r), False, d.deleted)
    s = _require_node(r)
    if s.color is RED:
        inner = balance_left_deleted(RED, d, meta, s.left)
        return DeletedDTree(make_node(BLACK, inner.tree, plus(meta, s.meta), s.right), False, d.deleted)
    if is_red(s.right):
        return DeletedDTree(
            make_node(c, make_node(BLACK, l, meta, s.left), plus(meta, s.meta), blacken(s.right)),
            False,
            d.deleted,
        )
    if is_red(s.left):
        near = s.left
        return DeletedDTree(
            make_node(
                c,
                make_node(BLACK, l, meta, near.left),
                plus(meta, near.meta),
                make_node(BLACK, near.right, minus(s.meta, near.meta), s.right),
            ),
            False,
            d.deleted,
        )
    if c is BLACK:
        logger.debug("black-height decrease propagates past a black node")
    return DeletedDTree(
        make_node(BLACK, l, meta, make_node(RED, s.left, s.meta, s.right)),
        c is BLACK,
        d.deleted,
    )


def balance_right_deleted(c: Color, l: DTree, meta: Meta, d: DeletedDTree) -> DeletedDTree:
    """Mirror of :func:`balance_left_deleted`; ``meta`` describes ``l``."""

    r = d.tree
    if not d.down:
        return DeletedDTree(make_node(c, l, meta, r), False, d.deleted)
    if is_red(r):
        return DeletedDTree(make_node(c, l, meta, blacken(r)), False, d.deleted)
    s = _require_node(l)
    if s.color is RED:
        inner = balance_right_deleted(RED, s.right, minus(meta, s.meta), d)
        return DeletedDTree(make_node(BLACK, s.left, s.meta, inner.tree), False, d.deleted)
    if is_red(s.left):
        return DeletedDTree(
            make_node(c, blacken(s.left), s.meta, make_node(BLACK, s.right, minus(meta, s.meta), r)),
            False,
            d.deleted,
        )
    if is_red(s.right):
        near = s.right
        left_size = plus(s.meta, near.meta)
        return DeletedDTree(
            make_node(
                c,
                make_node(BLACK, s.left, s.meta, near.left),
                left_size,
                make_node(BLACK, near.right, minus(meta, left_size), r),
            ),
            False,
            d.deleted,
        )
    if c is BLACK:
        logger.debug("black-height decrease propagates past a black node")
    return DeletedDTree(
        make_node(BLACK, make_node(RED, s.left, s.meta, s.right), meta, r),
        c is BLACK,
        d.deleted,
    )
