import random

import pytest

from succinct.bitvec_core.utils import parse_bits
from succinct.louds.utils import leaf, node, with_super_root
from succinct.models import BLACK, RED, Leaf, Node, SizeBounds, Tree

SAMPLE_BITS = parse_bits(
    "1001 0100 1110 0100 1101 0000 1111 0100 1001 1001 0100 0100 0101 0101 10"
)

LOUDS_T = parse_bits("1 0 1 1 1 0 1 1 0 0 1 1 1 0 0 0 0 1 0 0 0")


def sample_tree() -> Tree:
    return node(
        1,
        node(2, leaf(5), leaf(6)),
        leaf(3),
        node(4, leaf(7), node(8, leaf(10)), leaf(9)),
    )


def bits_leaf(text: str) -> Leaf:
    return Leaf(parse_bits(text))


def sample_dtree():
    """Four-level example tree with leaves of 8 bits."""
    return Node(
        BLACK,
        Node(BLACK, bits_leaf("10000010"), 8, 2, bits_leaf("00000100")),
        16,
        3,
        Node(
            BLACK,
            Node(RED, bits_leaf("00001010"), 8, 2, bits_leaf("00001011")),
            16,
            5,
            bits_leaf("10000001"),
        ),
    )


def random_tree(rng: random.Random, size: int) -> Tree:
    """Random tree of ``size`` nodes built by random recursive attachment."""
    kids = [[] for _ in range(size)]
    for k in range(1, size):
        kids[rng.randrange(k)].append(k)

    def build(k: int) -> Tree:
        return Tree(k, tuple(build(c) for c in kids[k]))

    return build(0)


@pytest.fixture
def sample_bits():
    return SAMPLE_BITS


@pytest.fixture
def tree():
    return sample_tree()


@pytest.fixture
def super_tree():
    return with_super_root(sample_tree())


@pytest.fixture
def dtree():
    return sample_dtree()


@pytest.fixture
def small_bounds():
    return SizeBounds(low=3, high=6)


@pytest.fixture
def rng():
    return random.Random(20240601)
