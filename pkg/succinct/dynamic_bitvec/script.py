"""Op scripts: one operation per line, replayed against a dynamic vector.

    insert <i> <0|1>    delete <i>    set <i>    clear <i>
    rank <i>    select0 <k>    select1 <k>    access <i>

Query ops produce one integer each. Blank lines and ``#`` comments are
skipped.
"""

import logging
import random
from typing import List, NamedTuple, Optional, Tuple

from ..errors import ScriptError, VerificationError
from ..reference_oracle.utils import FlatVector
from .vector import DynamicBitVector

logger = logging.getLogger(__name__)

ARITY = {
    "insert": 2,
    "delete": 1,
    "set": 1,
    "clear": 1,
    "rank": 1,
    "select0": 1,
    "select1": 1,
    "access": 1,
}
QUERIES = {"rank", "select0", "select1", "access"}


class Op(NamedTuple):
    line: int
    name: str
    args: Tuple[int, ...]

    def __str__(self) -> str:
        return " ".join([self.name] + [str(a) for a in self.args])


def parse_script(text: str) -> List[Op]:
    ops = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, *rest = line.split()
        if name not in ARITY:
            raise ScriptError(f"unknown op {name!r}", lineno)
        if len(rest) != ARITY[name]:
            raise ScriptError(f"{name} takes {ARITY[name]} argument(s), got {len(rest)}", lineno)
        if not all(a.isdigit() for a in rest):
            raise ScriptError(f"arguments must be non-negative integers: {' '.join(rest)}", lineno)
        args = tuple(int(a) for a in rest)
        if name == "insert" and args[1] not in (0, 1):
            raise ScriptError(f"inserted bit must be 0 or 1, got {args[1]}", lineno)
        ops.append(Op(lineno, name, args))
    return ops


def apply_op(vec, op: Op) -> Optional[int]:
    """Run ``op`` on a DynamicBitVector or a FlatVector."""
    if op.name == "insert":
        vec.insert(op.args[0], bool(op.args[1]))
        return None
    if op.name in ("delete", "set", "clear"):
        getattr(vec, op.name)(op.args[0])
        return None
    return int(getattr(vec, op.name)(op.args[0]))


def run_script(ops: List[Op], vec: DynamicBitVector, verify: bool = False) -> List[int]:
    """Execute ``ops`` in order and collect query results.

    With ``verify`` every op is mirrored on a FlatVector; results, contents
    and the tree invariants are compared after each step.
    """

    oracle = FlatVector(vec.to_bits()) if verify else None
    outputs: List[int] = []
    for op in ops:
        try:
            result = apply_op(vec, op)
        except IndexError as exc:
            raise ScriptError(f"{op}: {exc}", op.line) from exc
        if result is not None:
            outputs.append(result)
        if oracle is None:
            continue
        expected = apply_op(oracle, op)
        if result != expected:
            logger.error("line %d: %s gave %s, oracle gave %s", op.line, op, result, expected)
            raise VerificationError(f"line {op.line}: {op} gave {result}, expected {expected}")
        if vec.to_bits() != tuple(oracle.bits):
            logger.error("line %d: contents diverged after %s", op.line, op)
            raise VerificationError(f"line {op.line}: contents diverged after {op}")
        try:
            vec.check()
        except VerificationError as exc:
            raise VerificationError(f"line {op.line}: {exc} after {op}") from exc
    return outputs


# (insert, delete) shares of the ops in each phase of a random script
GROWING = (0.75, 0.05)
SHRINKING = (0.05, 0.75)
BALANCED = (0.2, 0.2)


def _pick(rng: random.Random, length: int, lean: Tuple[float, float]) -> str:
    insert_share, delete_share = lean
    r = rng.random()
    if r < insert_share:
        return "insert"
    if length and r < insert_share + delete_share:
        return "delete"
    if not length:
        return rng.choice(("rank", "select0", "select1"))
    return rng.choice(("set", "clear", "access", "rank", "select0", "select1"))


def random_script(
    rng: random.Random, count: int, length: int = 0, grow: Optional[float] = 0.5
) -> List[Op]:
    """Random valid ops for a vector that starts with ``length`` bits.

    The first ``grow`` share of the ops leans on inserts and the rest on
    deletes, so the vector builds a tree of several leaves and then takes
    it apart again. With ``grow=None`` inserts and deletes stay equally
    likely throughout.
    """
    turn = None if grow is None else count * grow
    ops = []
    for lineno in range(1, count + 1):
        if turn is None:
            lean = BALANCED
        else:
            lean = GROWING if lineno <= turn else SHRINKING
        name = _pick(rng, length, lean)
        if name == "insert":
            args: Tuple[int, ...] = (rng.randint(0, length), rng.randint(0, 1))
            length += 1
        elif name == "delete":
            args = (rng.randrange(length),)
            length -= 1
        elif name in ("set", "clear", "access"):
            args = (rng.randrange(length),)
        else:
            args = (rng.randint(0, length + 1),)
        ops.append(Op(lineno, name, args))
    return ops
