"""Debug s-expressions for dynamic bit vector trees.

    (black 16 3
      (black 8 2
        "10000010"
        "00000100")
      "10000001")

A node is ``(color num ones left right)``; a leaf is its quoted bits.
"""

import re
from typing import List, Tuple

from ..bitvec_core.utils import format_bits, parse_bits
from ..errors import BitParseError, TreeParseError
from ..models import Color, DTree, Leaf, Node

_TOKEN = re.compile(r'\(|\)|"[^"]*"|[^\s()"]+')


def dump(t: DTree, indent: int = 2) -> str:
    lines: List[str] = []

    def emit(node: DTree, level: int, closing: int) -> None:
        pad = " " * (indent * level)
        if isinstance(node, Leaf):
            lines.append(f'{pad}"{format_bits(node.arr)}"' + ")" * closing)
            return
        lines.append(f"{pad}({node.color.value} {node.num} {node.ones}")
        emit(node.left, level + 1, 0)
        emit(node.right, level + 1, closing + 1)

    emit(t, 0, 0)
    return "\n".join(lines)


def _tokenize(text: str) -> List[Tuple[str, int, int]]:
    tokens = []
    for lineno, line in enumerate(text.splitlines(), 1):
        for m in _TOKEN.finditer(line):
            tokens.append((m.group(), lineno, m.start() + 1))
    return tokens


def parse_dump(text: str) -> DTree:
    """Read a dump back; metadata is taken as written, not recomputed."""
    tokens = _tokenize(text)
    if not tokens:
        raise TreeParseError("empty input", 1, 1)
    pos = 0

    def take() -> Tuple[str, int, int]:
        nonlocal pos
        if pos >= len(tokens):
            tok, line, col = tokens[-1]
            raise TreeParseError("unexpected end of input", line, col + len(tok))
        tok = tokens[pos]
        pos += 1
        return tok

    def number() -> int:
        tok, line, col = take()
        if not tok.isdigit():
            raise TreeParseError(f"expected a number, got {tok!r}", line, col)
        return int(tok)

    def tree() -> DTree:
        tok, line, col = take()
        if tok.startswith('"'):
            try:
                return Leaf(parse_bits(tok[1:-1]))
            except BitParseError as exc:
                raise TreeParseError(str(exc), line, col) from exc
        if tok != "(":
            raise TreeParseError(f"expected '(' or a quoted leaf, got {tok!r}", line, col)
        ctok, cline, ccol = take()
        try:
            color = Color(ctok.lower())
        except ValueError:
            raise TreeParseError(f"unknown color {ctok!r}", cline, ccol) from None
        num, ones = number(), number()
        left, right = tree(), tree()
        end, eline, ecol = take()
        if end != ")":
            raise TreeParseError(f"expected ')', got {end!r}", eline, ecol)
        return Node(color, left, num, ones, right)

    result = tree()
    if pos != len(tokens):
        tok, line, col = tokens[pos]
        raise TreeParseError(f"unexpected {tok!r} after the tree ended", line, col)
    return result
