"""Command line front end.

    python run.py louds-build tree.txt --super-root
    python run.py louds-query BITS children --pos 17
    python run.py dbv-run ops.txt --initial 1011 --bounds 3,6 --verify --dump
    python run.py verify louds tree.txt
    python run.py verify dbv --ops 10000 --seed 1

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.
"""

import logging
import os
import random
import time
from typing import Optional, Tuple

import click

from succinct.bitvec_core.utils import format_bits, parse_bits
from succinct.dynamic_bitvec.dump import parse_dump
from succinct.dynamic_bitvec.script import parse_script, random_script, run_script
from succinct.dynamic_bitvec.vector import DynamicBitVector
from succinct.errors import SuccinctError, VerificationError
from succinct.louds import utils as louds_utils
from succinct.models import SizeBounds
from succinct.reference_oracle import utils as oracle

logger = logging.getLogger("succinct.cli")


class UsageFailure(click.ClickException):
    """Bad input: reported like click's own usage errors."""

    exit_code = 2


class Mismatch(click.ClickException):
    exit_code = 1


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as exc:
        raise UsageFailure(f"cannot read {path}: {exc.strerror}") from exc


def _load_tree(path: str, super_root: bool):
    try:
        tree = louds_utils.parse_tree(_read_text(path))
    except SuccinctError as exc:
        raise UsageFailure(f"{path}: {exc}") from exc
    return louds_utils.with_super_root(tree) if super_root else tree


def _parse_path(text: Optional[str]) -> Tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise UsageFailure(f"--path must be comma-separated integers, got {text!r}") from None


def _bounds(text: Optional[str]) -> SizeBounds:
    if not text:
        return SizeBounds.from_config()
    try:
        return SizeBounds.parse(text)
    except SuccinctError as exc:
        raise UsageFailure(str(exc)) from exc


def _bits_argument(value: str):
    text = _read_text(value) if os.path.isfile(value) else value
    try:
        return parse_bits(text)
    except SuccinctError as exc:
        raise UsageFailure(str(exc)) from exc


@click.group()
@click.option("--time", "show_time", is_flag=True, help="Print elapsed time on stderr.")
@click.option("-v", "--verbose", count=True, help="Repeat for debug logging.")
@click.pass_context
def cli(ctx, show_time, verbose):
    level = logging.WARNING - 10 * min(verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    if show_time:
        started = time.perf_counter()
        ctx.call_on_close(
            lambda: click.echo(f"elapsed {time.perf_counter() - started:.6f}s", err=True)
        )


@cli.command("louds-build")
@click.argument("tree_file", type=click.Path(dir_okay=False))
@click.option("--super-root", is_flag=True, help="Hang the tree under an anonymous root first.")
def louds_build(tree_file, super_root):
    """Print the LOUDS bits of the tree in TREE_FILE."""
    tree = _load_tree(tree_file, super_root)
    click.echo(format_bits(louds_utils.louds_encode(tree)))


@cli.command("louds-query")
@click.argument("bits")
@click.argument("op", type=click.Choice(["children", "child", "parent"]))
@click.option("--pos", type=click.IntRange(min=0), required=True)
@click.option("--index", type=click.IntRange(min=0))
@click.option("--verify", "verify_file", type=click.Path(dir_okay=False), help="Tree file to check against.")
@click.option("--path", "path_text", help="Comma-separated path of --pos in the --verify tree.")
@click.option("--super-root", is_flag=True, help="The --verify tree was encoded under a super-root.")
def louds_query(bits, op, pos, index, verify_file, path_text, super_root):
    """Answer a navigation query on BITS (a bit string or a file)."""
    louds = louds_utils.LoudsTree(_bits_argument(bits))
    try:
        if op == "children":
            result = louds.children(pos)
        elif op == "parent":
            result = louds.parent(pos)
        else:
            if index is None:
                raise UsageFailure("child needs --index")
            result = louds.child(pos, index)
    except SuccinctError as exc:
        raise UsageFailure(str(exc)) from exc
    click.echo(result)

    if verify_file is None:
        return
    tree = _load_tree(verify_file, super_root)
    path = _parse_path(path_text)
    if oracle.oracle_louds(tree) != louds.bits:
        raise Mismatch("bits are not the LOUDS encoding of the --verify tree")
    positions = oracle.oracle_positions(tree)
    if positions.get(path) != pos:
        raise Mismatch(f"path {list(path)} is at {positions.get(path)}, not {pos}")
    nav = oracle.tree_navigate(tree, path)
    if op == "children":
        expected = nav.children
    elif op == "parent":
        expected = positions[nav.parent]
    else:
        expected = positions[nav.child_paths[index]]
    if result != expected:
        logger.error("%s at %d: formula %d, oracle %d", op, pos, result, expected)
        raise Mismatch(f"{op} gave {result}, oracle expects {expected}")


@cli.command("dbv-run")
@click.argument("script_file", type=click.Path(dir_okay=False))
@click.option("--initial", help="Initial contents: a bit string, or a file holding one.")
@click.option("--initial-tree", type=click.Path(dir_okay=False), help="Initial tree as a debug dump.")
@click.option("--bounds", "bounds_text", help="Leaf bounds as LOW,HIGH.")
@click.option("--verify", is_flag=True, help="Mirror every op on the flat oracle.")
@click.option("--dump", "show_dump", is_flag=True, help="Print the final tree.")
def dbv_run(script_file, initial, initial_tree, bounds_text, verify, show_dump):
    """Replay the op script in SCRIPT_FILE."""
    bounds = _bounds(bounds_text)
    try:
        ops = parse_script(_read_text(script_file))
        if initial_tree:
            vec = DynamicBitVector.from_tree(parse_dump(_read_text(initial_tree)), bounds)
        else:
            vec = DynamicBitVector(_bits_argument(initial) if initial else (), bounds)
        if verify:
            vec.check()
        outputs = run_script(ops, vec, verify=verify)
    except VerificationError as exc:
        raise Mismatch(str(exc)) from exc
    except SuccinctError as exc:
        raise UsageFailure(str(exc)) from exc
    for value in outputs:
        click.echo(value)
    if show_dump:
        click.echo(vec.dump())


@cli.group()
def verify():
    """Cross-check whole structures against the reference oracle."""


def check_louds(tree) -> int:
    """Compare every navigation answer of ``tree``'s encoding with the oracle."""
    bits = louds_utils.louds_encode(tree)
    if bits != oracle.oracle_louds(tree):
        raise VerificationError("encoding differs from the queue-built LOUDS")
    checked = louds_utils.LoudsTree(bits)
    positions = oracle.oracle_positions(tree)
    for path, pos in positions.items():
        nav = oracle.tree_navigate(tree, path)
        if louds_utils.louds_children(bits, pos) != nav.children or checked.children(pos) != nav.children:
            raise VerificationError(f"children at {list(path)}")
        for k, child_path in enumerate(nav.child_paths):
            if louds_utils.louds_child(bits, pos, k) != positions[child_path] or checked.child(pos, k) != positions[child_path]:
                raise VerificationError(f"child {k} at {list(path)}")
        if nav.parent is not None:
            if louds_utils.louds_parent(bits, pos) != positions[nav.parent] or checked.parent(pos) != positions[nav.parent]:
                raise VerificationError(f"parent at {list(path)}")
    return len(positions)


@verify.command("louds")
@click.argument("tree_file", type=click.Path(dir_okay=False))
@click.option("--super-root", is_flag=True)
def verify_louds(tree_file, super_root):
    """Check the encoding and every node's navigation for TREE_FILE."""
    tree = _load_tree(tree_file, super_root)
    try:
        nodes = check_louds(tree)
    except VerificationError as exc:
        raise Mismatch(str(exc)) from exc
    click.echo(f"ok {nodes} nodes")


@verify.command("dbv")
@click.option("--ops", "count", type=click.IntRange(min=1), default=10000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--bounds", "bounds_text", help="Leaf bounds as LOW,HIGH.")
@click.option(
    "--grow",
    type=click.FloatRange(0, 1),
    default=0.5,
    show_default=True,
    help="Share of the ops that lean on inserts before deletes take over.",
)
@click.option("--balanced", is_flag=True, help="Keep inserts and deletes equally likely throughout.")
def verify_dbv(count, seed, bounds_text, grow, balanced):
    """Run a random op script under verification."""
    bounds = _bounds(bounds_text)
    ops = random_script(random.Random(seed), count, grow=None if balanced else grow)
    try:
        run_script(ops, DynamicBitVector(bounds=bounds), verify=True)
    except VerificationError as exc:
        raise Mismatch(str(exc)) from exc
    click.echo(f"ok {count} ops")


def main() -> None:
    cli(prog_name="succinct")


if __name__ == "__main__":
    main()
