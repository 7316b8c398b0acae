"""The GEN text format for generator matrices.

::

    # optional comment lines; the first one is the code's label
    n k
    <k lines of exactly n characters from {0,1}>

Newlines are LF.  Files are written with a trailing newline; on read it is
optional.  Rows need not be reduced, but they must have rank exactly ``k``.
Other encodings of a code database (hex rows, GAP/Magma matrices) should be
converted to this row form first.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .codes import LinearCode, code_from_ints
from .gf2la import format_bits, parse_bits, rank_of_rows


class GenFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class CodeFile:
    code: LinearCode
    label: str = ""
    path: Path | None = None


def parse_code_file(text: str, path: Path | str | None = None) -> CodeFile:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    label = ""
    i = 0
    while i < len(lines) and lines[i].startswith("#"):
        label = label or lines[i][1:].strip()
        i += 1
    if i == len(lines):
        raise GenFormatError("missing 'n k' header")
    header = lines[i].split(" ")
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise GenFormatError(f"bad header {lines[i]!r}, expected 'n k'", i + 1)
    n, k = int(header[0]), int(header[1])
    if k > n:
        raise GenFormatError(f"dimension {k} exceeds length {n}", i + 1)
    body = lines[i + 1:]
    if len(body) != k:
        raise GenFormatError(f"expected {k} rows, found {len(body)}", i + 2)
    rows = []
    for j, line in enumerate(body, start=i + 2):
        if len(line) != n:
            raise GenFormatError(f"row has {len(line)} characters, expected {n}", j)
        bad = next((ch for ch in line if ch not in "01"), None)
        if bad is not None:
            raise GenFormatError(f"invalid character {bad!r}", j)
        rows.append(parse_bits(line))
    r = rank_of_rows(rows)
    if r != k:
        dependent = _dependent_rows(rows, i + 2)
        raise GenFormatError(f"rank {r} != declared dimension {k} (dependent rows: {dependent})")
    p = Path(path) if path is not None else None
    if not label and p is not None:
        label = p.stem
    return CodeFile(code_from_ints(n, rows), label, p)


def _dependent_rows(rows: list[int], first_line: int) -> list[int]:
    """Line numbers of rows lying in the span of the rows above them."""
    out = []
    basis: dict[int, int] = {}
    for j, r in enumerate(rows):
        x = r
        while x:
            top = x.bit_length() - 1
            if top not in basis:
                basis[top] = x
                break
            x ^= basis[top]
        if not x:
            out.append(first_line + j)
    return out


def write_code_file(c: LinearCode, label: str = "") -> str:
    head = f"# {label}\n" if label else ""
    body = "".join(format_bits(r, c.n) + "\n" for r in c.rows)
    return f"{head}{c.n} {c.k}\n{body}"


def read_code_file(path: Path | str) -> CodeFile:
    p = Path(path)
    return parse_code_file(p.read_text(), p)


def save_code_file(path: Path | str, c: LinearCode, label: str = "") -> None:
    Path(path).write_text(write_code_file(c, label))
