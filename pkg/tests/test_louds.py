import random

import pytest
from hypothesis import given, settings, strategies as st

from succinct.bitvec_core.utils import pred, rank, succ
from succinct.errors import InvalidPathError, InvalidPositionError, LabelError, SuccinctError, TreeParseError
from succinct.louds import utils
from succinct.models import Tree
from succinct.reference_oracle.utils import bfs_queue, oracle_louds, oracle_positions

from .conftest import LOUDS_T, random_tree

label = lambda t: t.label

trees = st.recursive(
    st.builds(Tree, st.integers(0, 99)),
    lambda kids: st.builds(Tree, st.integers(0, 99), st.lists(kids, max_size=4).map(tuple)),
    max_leaves=40,
)
levels = st.lists(st.lists(st.integers(0, 9), max_size=3), max_size=4)


def all_paths(t, prefix=()):
    yield prefix
    for k, c in enumerate(t.children):
        yield from all_paths(c, prefix + (k,))


def forest_traversal(f, s):
    out = []
    while s:
        out.extend(f(x) for x in s)
        s = utils.children_of_forest(s)
    return out


def test_sample_tree_shape(tree):
    assert utils.height(tree) == 4
    assert utils.number_of_nodes(tree) == 10
    assert utils.lo_traversal(label, tree) == list(range(1, 11))
    assert utils.level_traversal(label, tree) == [[1], [2, 3, 4], [5, 6, 7, 8, 9], [10]]
    assert utils.children_description(tree) == (True, True, True, False)


def test_louds_encoding_with_super_root(super_tree):
    assert utils.louds_encode(super_tree) == LOUDS_T
    assert utils.louds_encode(super_tree)[2:] == utils.louds_encode(super_tree.children[0])


def test_louds_position_example(super_tree):
    assert utils.louds_position([super_tree], [0, 2, 1]) == 17
    assert utils.louds_position([super_tree], []) == 0
    assert utils.louds_label(super_tree, 17) == 8


def test_navigation_examples():
    b = LOUDS_T
    assert utils.louds_children(b, 17) == 1
    assert utils.louds_children(b, 0) == 1
    assert utils.louds_children(b, 2) == 3
    assert utils.louds_child(b, 10, 1) == 17
    assert utils.louds_child(b, 0, 0) == 2
    assert utils.louds_parent(b, 17) == 10
    assert utils.louds_parent(b, 2) == 0
    assert succ(False, b, 18) == 19
    assert succ(False, b, 3) == 6
    assert pred(False, b, 1) == 0
    assert pred(False, b, 5) == 2


def test_fringe_and_index(tree):
    assert [t.label for t in utils.lo_fringe([tree], [2, 1])] == [8, 9]
    assert utils.lo_index([tree], [2, 1]) == 7
    assert utils.lo_traversal_lt(label, [tree], [2, 1]) == [1, 2, 3, 4, 5, 6, 7]


def test_paths(tree):
    assert utils.valid_position(tree, [2, 1, 0])
    assert not utils.valid_position(tree, [1, 0])
    assert utils.children(tree, [2]) == 3
    assert utils.subtree(tree, [0, 1]).label == 6
    with pytest.raises(InvalidPathError):
        utils.subtree(tree, [3])


@settings(max_examples=150)
@given(trees)
def test_traversals_agree(t):
    assert utils.lo_traversal(label, t) == utils.lo_traversal_st(label, t) == bfs_queue(t)
    assert utils.level_traversal_cat(label, t) == utils.level_traversal(label, t)
    assert len(utils.level_traversal(label, t)) == utils.height(t)


@settings(max_examples=150)
@given(trees)
def test_encoding_matches_queue_build(t):
    bits = utils.louds_encode(t)
    assert bits == oracle_louds(t)
    n = utils.number_of_nodes(t)
    assert len(bits) == 2 * n - 1
    assert rank(False, len(bits), bits) == n


@settings(max_examples=100)
@given(levels, levels, levels)
def test_mzip_laws(a, b, c):
    assert utils.mzip(a, []) == a
    assert utils.mzip([], a) == a
    assert utils.mzip(utils.mzip(a, b), c) == utils.mzip(a, utils.mzip(b, c))


@settings(max_examples=100)
@given(trees, levels)
def test_level_traversal_cat_is_mzip(t, acc):
    assert utils.level_traversal_cat(label, t, acc) == utils.mzip(utils.level_traversal(label, t), acc)


@settings(max_examples=100)
@given(trees)
def test_prefix_and_fringe_rebuild_traversal(t):
    full = utils.louds_encode(t)
    whole = utils.lo_traversal(label, t)
    for p in all_paths(t):
        assert full[: utils.louds_position([t], p)] == utils.louds_lt([t], p)
        rest = forest_traversal(label, utils.lo_fringe([t], p))
        assert utils.lo_traversal_lt(label, [t], p) + rest == whole


def test_navigation_matches_oracle_on_random_trees():
    rng = random.Random(7)
    for _ in range(300):
        t = random_tree(rng, rng.randint(1, 60))
        bits = utils.louds_encode(t)
        positions = oracle_positions(t)
        for p in all_paths(t):
            v = utils.louds_position([t], p)
            assert v == positions[p]
            assert utils.louds_children(bits, v) == utils.children(t, p)
            for i in range(utils.children(t, p)):
                w = utils.louds_child(bits, v, i)
                assert w == positions[p + (i,)]
                assert utils.louds_parent(bits, w) == v
            assert utils.lo_index([t], p) == rank(False, v, bits)


def test_louds_tree_checked_navigation(tree):
    lt = utils.LoudsTree.from_tree(tree, super_root=True, block_size=4)
    assert len(lt) == 11
    assert lt.children(17) == 1
    assert lt.child(10, 1) == 17
    assert lt.parent(17) == 10
    assert lt.label(17) == 8
    assert lt.position_of((0, 2, 1)) == 17
    assert lt.path_of(17) == (0, 2, 1)
    assert lt.positions() == sorted(oracle_positions(utils.with_super_root(tree)).values())
    assert not lt.is_position(18)
    with pytest.raises(InvalidPositionError):
        lt.children(18)
    with pytest.raises(InvalidPositionError):
        lt.parent(0)
    with pytest.raises(InvalidPositionError):
        lt.child(17, 1)
    with pytest.raises(InvalidPathError):
        lt.position_of((0, 5))


def test_louds_tree_paths_round_trip():
    rng = random.Random(11)
    for _ in range(50):
        t = random_tree(rng, rng.randint(1, 40))
        lt = utils.LoudsTree.from_tree(t, block_size=8)
        for p, v in oracle_positions(t).items():
            assert lt.position_of(p) == v
            assert lt.path_of(v) == p
            assert lt.label(v) == utils.subtree(t, p).label


def test_parse_and_format_tree(tree):
    text = "(1 (2 (5) (6))\n (3)\n (4 (7) (8 (10)) (9)))"
    parsed = utils.parse_tree(text)
    assert utils.format_tree(parsed) == "(1 (2 (5) (6)) (3) (4 (7) (8 (10)) (9)))"
    assert utils.louds_encode(parsed) == utils.louds_encode(tree)


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("", 1, 1),
        ("(1 (2)", 1, 7),
        (")", 1, 1),
        ("(1) (2)", 1, 5),
        ("(1 2)", 1, 4),
        ("(1\n  ())", 2, 4),
    ],
)
def test_parse_tree_errors(text, line, column):
    with pytest.raises(TreeParseError) as exc:
        utils.parse_tree(text)
    assert (exc.value.line, exc.value.column) == (line, column)


def test_long_paths_give_whole_traversal():
    rng = random.Random(3)
    for _ in range(200):
        t = random_tree(rng, rng.randint(1, 80))
        p = [rng.randint(0, 3) for _ in range(utils.height(t) + rng.randint(0, 2))]
        assert utils.lo_traversal_lt(label, [t], p) == utils.lo_traversal_st(label, t)


def test_traversal_of_concatenated_paths():
    rng = random.Random(5)
    for _ in range(200):
        t = random_tree(rng, rng.randint(1, 60))
        p1 = [rng.randint(0, 3) for _ in range(rng.randint(0, 4))]
        p2 = [rng.randint(0, 3) for _ in range(rng.randint(0, 4))]
        fringe = utils.lo_fringe([t], p1)
        assert utils.lo_traversal_lt(label, [t], p1 + p2) == (
            utils.lo_traversal_lt(label, [t], p1) + utils.lo_traversal_lt(label, fringe, p2)
        )


def test_size_law_on_large_trees():
    rng = random.Random(13)
    for _ in range(500):
        t = random_tree(rng, rng.randint(1, 2000))
        assert len(utils.louds_encode(t)) == 2 * utils.number_of_nodes(t) - 1


def test_small_cases(tree):
    assert utils.mzip([["a"]], [["b"], ["c"]]) == [["a", "b"], ["c"]]
    assert utils.louds_encode(utils.leaf("x")) == (False,)
    assert utils.level_traversal(label, utils.leaf("x")) == [["x"]]
    assert utils.lo_fringe([tree], []) == (tree,)
    assert utils.lo_traversal_lt(label, [tree], []) == []
    assert not utils.valid_position(tree, [3])
    assert utils.children(tree, [0]) == 2
    assert utils.children(tree, [2, 1]) == 1


def chain(n):
    t = Tree(0)
    for k in range(1, n):
        t = Tree(k, (t,))
    return t


def test_deep_chain_encodes_without_recursion():
    n = 1500
    t = chain(n)
    bits = utils.louds_encode(t)
    assert len(bits) == 2 * n - 1
    assert bits == oracle_louds(t)
    assert utils.height(t) == n
    assert utils.number_of_nodes(t) == n
    assert utils.lo_traversal(label, t) == list(range(n - 1, -1, -1))
    assert len(utils.level_traversal(label, t)) == n
    assert utils.format_tree(t) == "".join(f"({k} " for k in range(n - 1, 0, -1)) + "(0" + ")" * n


def test_deep_chain_louds_tree():
    n = 1500
    lt = utils.LoudsTree.from_tree(chain(n), super_root=True)
    assert len(lt) == n + 1
    v = lt.position_of((0,) * n)
    assert lt.label(v) == 0
    assert lt.children(v) == 0
    assert lt.path_of(lt.parent(v)) == (0,) * (n - 1)
    parsed = utils.parse_tree(utils.format_tree(chain(n)))
    assert parsed.label == str(n - 1)
    assert utils.louds_encode(parsed) == utils.louds_encode(chain(n))


def test_louds_tree_label_errors():
    with pytest.raises(LabelError):
        utils.LoudsTree(LOUDS_T, labels=[1, 2])
    plain = utils.LoudsTree(LOUDS_T)
    with pytest.raises(LabelError) as exc:
        plain.label(0)
    assert isinstance(exc.value, SuccinctError)
