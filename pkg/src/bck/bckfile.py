"""Plain-text serialization of Cayley tables and Hasse-diagram DOT output.

The .bck format::

    bck 1
    3
    0 0 0
    1 0 0
    2 2 0
    # optional trailing comments

Line 1 is the fixed header, line 2 the order n, then n rows of n decimal
entries (row x lists x*0 .. x*(n-1)); only comment or blank lines may
follow.  Emission is deterministic and parse(emit(t)) == t.
"""

from __future__ import annotations

from collections.abc import Iterable

from .core import BckAlgebra, CayleyTable

HEADER = "bck 1"


class ParseError(ValueError):
    """Input does not parse as a .bck file; message carries the line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


def parse_bck(text: str) -> CayleyTable:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()  # a final newline does not start a new line
    if not lines or lines[0] != HEADER:
        raise ParseError(1, f"expected header {HEADER!r}")
    if len(lines) < 2:
        raise ParseError(2, "missing order line")
    try:
        n = int(lines[1])
    except ValueError:
        raise ParseError(2, f"order is not a decimal integer: {lines[1]!r}") from None
    if n < 1:
        raise ParseError(2, f"order must be positive, got {n}")
    rows = []
    for x in range(n):
        line_no = 3 + x
        if line_no - 1 >= len(lines):
            raise ParseError(line_no, f"missing row {x + 1} of {n}")
        parts = lines[line_no - 1].split()
        if len(parts) != n:
            raise ParseError(
                line_no, f"row {x + 1} has {len(parts)} entries, expected {n}"
            )
        row = []
        for y, part in enumerate(parts):
            try:
                v = int(part)
            except ValueError:
                raise ParseError(
                    line_no, f"non-numeric entry {part!r} at row {x + 1}"
                ) from None
            if not 0 <= v < n:
                raise ParseError(
                    line_no,
                    f"entry {v} out of range 0..{n - 1} at row {x + 1}, "
                    f"column {y + 1}",
                )
            row.append(v)
        rows.append(tuple(row))
    for extra, line in enumerate(lines[2 + n :], start=3 + n):
        if line and not line.startswith("#"):
            raise ParseError(extra, f"unexpected content after table: {line!r}")
    return CayleyTable(tuple(rows))


def emit_bck(table: CayleyTable, comments: Iterable[str] = ()) -> str:
    out = [HEADER, str(table.order)]
    for row in table.rows:
        out.append(" ".join(str(v) for v in row))
    for comment in comments:
        out.append(f"# {comment}")
    return "\n".join(out) + "\n"


def emit_hasse_dot(algebra: BckAlgebra) -> str:
    """The covering relation as a DOT digraph, drawn bottom-to-top.

    One node per element labeled by index, one edge per covering pair;
    node and edge order are deterministic.
    """
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for x in algebra.elements():
        lines.append(f"  {x};")
    for x, y in sorted(algebra.hasse_covers()):
        lines.append(f"  {x} -> {y};")
    lines.append("}")
    return "\n".join(lines) + "\n"
