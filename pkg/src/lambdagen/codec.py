"""Binary matrices as row-code tuples, with column-code and text conversions.

A matrix is stored as one integer per row. Row codes read the row left to
right, most significant bit first; column codes read the column top to
bottom, most significant bit first.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

RowTuple = Tuple[int, ...]
ColTuple = Tuple[int, ...]

STYLES = ("row-codes", "bit-grid", "json-line")


class MatrixParseError(ValueError):
    """Malformed matrix text; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class BinMatrix:
    n: int
    m: int
    rows: RowTuple

    def __post_init__(self):
        if self.n <= 0 or self.m <= 0:
            raise ValueError(f"dimensions must be positive, got {self.n}x{self.m}")
        rows = tuple(int(x) for x in self.rows)
        if len(rows) != self.n:
            raise ValueError(f"expected {self.n} row codes, got {len(rows)}")
        limit = 1 << self.m
        for i, x in enumerate(rows):
            if not 0 <= x < limit:
                raise ValueError(f"row {i} code {x} does not fit in {self.m} bits")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_grid(cls, grid: Sequence[Sequence[int]]) -> "BinMatrix":
        if not grid:
            raise ValueError("empty grid")
        m = len(grid[0])
        rows = []
        for i, row in enumerate(grid):
            if len(row) != m:
                raise ValueError(f"row {i} has {len(row)} entries, expected {m}")
            x = 0
            for a in row:
                if a not in (0, 1):
                    raise ValueError(f"entry {a!r} in row {i} is not 0 or 1")
                x = (x << 1) | a
            rows.append(x)
        return cls(len(grid), m, tuple(rows))

    @classmethod
    def from_cols(cls, cols: Sequence[int], n: int) -> "BinMatrix":
        return cls(len(cols), n, tuple(cols)).transpose()

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> (self.m - 1 - j)) & 1

    def grid(self) -> List[List[int]]:
        return [[(x >> (self.m - 1 - j)) & 1 for j in range(self.m)] for x in self.rows]

    def transpose(self) -> "BinMatrix":
        return BinMatrix(self.m, self.n, cols_from_rows(self.rows, self.m))

    def __str__(self) -> str:
        return format_matrix(self, "bit-grid")


def rows_of(a: BinMatrix) -> RowTuple:
    return a.rows


def cols_of(a: BinMatrix) -> ColTuple:
    # entrywise construction, kept apart from the bit-transposition path
    ys = []
    for j in range(a.m):
        y = 0
        for i in range(a.n):
            y = (y << 1) | a.entry(i, j)
        ys.append(y)
    return tuple(ys)


def matrix_from_rows(xs: Sequence[int], width: Optional[int] = None) -> BinMatrix:
    """Inverse of :func:`rows_of`; ``width`` defaults to ``len(xs)`` (square)."""
    return BinMatrix(len(xs), len(xs) if width is None else width, tuple(xs))


def cols_from_rows(xs: Sequence[int], width: Optional[int] = None) -> ColTuple:
    """Column codes of the matrix whose row codes are ``xs``, without a grid."""
    n = len(xs)
    m = n if width is None else width
    ys = [0] * m
    for x in xs:
        for j in range(m):
            ys[j] = (ys[j] << 1) | ((x >> (m - 1 - j)) & 1)
    return tuple(ys)


def lex_less(s: Sequence[int], t: Sequence[int]) -> bool:
    return tuple(s) < tuple(t)


# text formats ---------------------------------------------------------------

def format_matrix(a: BinMatrix, style: str = "row-codes") -> str:
    """Render ``a`` in one of :data:`STYLES` (no trailing newline)."""
    if style == "row-codes":
        return " ".join(str(x) for x in a.rows)
    if style == "bit-grid":
        return "\n".join(format(x, f"0{a.m}b") for x in a.rows)
    if style == "json-line":
        return json.dumps({"n": a.n, "m": a.m, "rows": list(a.rows)})
    raise ValueError(f"unknown style {style!r}; expected one of {', '.join(STYLES)}")


def format_matrices(mats, style: str = "row-codes") -> str:
    sep = "\n\n" if style == "bit-grid" else "\n"
    return sep.join(format_matrix(a, style) for a in mats)


def _parse_row_codes(line: str, lineno: int, width: Optional[int]) -> BinMatrix:
    xs = []
    for tok in re.finditer(r"\S+", line):
        if not tok.group().isdigit():
            raise MatrixParseError(f"expected a decimal row code, got {tok.group()!r}", lineno, tok.start() + 1)
        xs.append(int(tok.group()))
    m = len(xs) if width is None else width
    for tok, x in zip(re.finditer(r"\S+", line), xs):
        if x >= 1 << m:
            raise MatrixParseError(f"row code {x} does not fit in {m} bits", lineno, tok.start() + 1)
    return BinMatrix(len(xs), m, tuple(xs))


def _parse_json_line(line: str, lineno: int) -> BinMatrix:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise MatrixParseError(exc.msg, lineno, exc.colno) from None
    if not isinstance(obj, dict) or not {"n", "m", "rows"} <= obj.keys():
        raise MatrixParseError("object must have fields n, m, rows", lineno, 1)
    try:
        return BinMatrix(obj["n"], obj["m"], tuple(obj["rows"]))
    except (TypeError, ValueError) as exc:
        raise MatrixParseError(str(exc), lineno, 1) from None


def _parse_grid_block(block: List[Tuple[int, str]]) -> BinMatrix:
    m = len(block[0][1])
    xs = []
    for lineno, line in block:
        if len(line) != m:
            raise MatrixParseError(f"row has {len(line)} entries, expected {m}", lineno, min(len(line), m) + 1)
        for col, ch in enumerate(line, 1):
            if ch not in "01":
                raise MatrixParseError(f"unexpected character {ch!r}", lineno, col)
        xs.append(int(line, 2))
    return BinMatrix(len(xs), m, tuple(xs))


def iter_parse(text: str, style: str = "row-codes", width: Optional[int] = None) -> Iterator[BinMatrix]:
    """Parse every matrix in ``text``. Lines starting with ``#`` are comments.

    Row codes carry no column count, so ``width`` defaults to the number of
    codes on the line (square matrices).
    """
    if style not in STYLES:
        raise ValueError(f"unknown style {style!r}; expected one of {', '.join(STYLES)}")
    block: List[Tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if style == "bit-grid":
            if line:
                block.append((lineno, line))
            elif block:
                yield _parse_grid_block(block)
                block = []
        elif line:
            if style == "row-codes":
                yield _parse_row_codes(raw, lineno, width)
            else:
                yield _parse_json_line(line, lineno)
    if block:
        yield _parse_grid_block(block)


def parse_matrix(text: str, style: str = "row-codes", width: Optional[int] = None) -> BinMatrix:
    """Parse exactly one matrix."""
    mats = list(iter_parse(text, style, width))
    if len(mats) != 1:
        raise MatrixParseError(f"expected one matrix, found {len(mats)}", 1, 1)
    return mats[0]
