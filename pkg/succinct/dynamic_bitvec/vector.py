"""DynamicBitVector: a handle on the current version of a dynamic tree."""

import logging
from typing import Iterable, Optional

from ..bitvec_core.utils import format_bits
from ..errors import VerificationError
from ..models import BitSeq, DTree, SizeBounds
from . import utils
from .dump import dump

logger = logging.getLogger(__name__)


class DynamicBitVector:
    """Bit vector supporting rank/select plus insert, delete, set and clear.

    Each update swaps in a new tree; older trees stay valid, so ``tree``
    snapshots can be read from other threads while one writer updates.
    """

    def __init__(self, bits: Iterable[bool] = (), bounds: Optional[SizeBounds] = None) -> None:
        self.bounds = bounds or SizeBounds.from_config()
        self.tree: DTree = utils.from_bitseq(tuple(bits), self.bounds)

    @classmethod
    def from_tree(cls, tree: DTree, bounds: Optional[SizeBounds] = None) -> "DynamicBitVector":
        vec = cls(bounds=bounds)
        vec.tree = tree
        return vec

    def __len__(self) -> int:
        return utils.dsize(self.tree)

    def __getitem__(self, i: int) -> bool:
        return utils.daccess(self.tree, i)

    def __repr__(self) -> str:
        return f"DynamicBitVector({format_bits(self.to_bits())!r}, low={self.bounds.low}, high={self.bounds.high})"

    def to_bits(self) -> BitSeq:
        return utils.dflatten(self.tree)

    def insert(self, i: int, b: bool) -> None:
        self.tree = utils.dinsert(self.tree, b, i, self.bounds)

    def delete(self, i: int) -> None:
        self.tree = utils.ddelete(self.tree, i, self.bounds)

    def set(self, i: int) -> bool:
        self.tree, changed = utils.dset(self.tree, i)
        return changed

    def clear(self, i: int) -> bool:
        self.tree, changed = utils.dclear(self.tree, i)
        return changed

    def access(self, i: int) -> bool:
        return utils.daccess(self.tree, i)

    def rank(self, i: int) -> int:
        return utils.drank(self.tree, i)

    def rank0(self, i: int) -> int:
        return utils.drank0(self.tree, i)

    def select0(self, k: int) -> int:
        return utils.dselect0(self.tree, k)

    def select1(self, k: int) -> int:
        return utils.dselect1(self.tree, k)

    def count(self) -> int:
        return utils.dones(self.tree)

    def black_height(self) -> Optional[int]:
        return utils.redblack_check(self.tree)

    def dump(self) -> str:
        return dump(self.tree)

    def check(self) -> int:
        """Raise VerificationError unless the tree is well formed and red-black.

        Returns the black-height.
        """

        if not utils.wf_check(self.tree, self.bounds, relaxed=True):
            logger.error("tree is not well formed:\n%s", self.dump())
            raise VerificationError("tree is not well formed")
        bh = utils.redblack_check(self.tree)
        if bh is None:
            logger.error("tree is not red-black:\n%s", self.dump())
            raise VerificationError("tree is not red-black")
        return bh
