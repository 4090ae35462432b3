"""Generation of the semi-canonical matrices with k ones per row and column.

A square binary matrix is semi-canonical when its row codes and its column
codes are both nondecreasing. The generator walks nondecreasing tuples of
weight-k row codes (an odometer over indices into the ascending code list)
and prunes prefixes that can no longer reach k ones in every column.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, List, Optional, Sequence, Tuple, Union

from .bitcore import MAX_WIDTH, bit_at, k_subset_codes, popcount
from .codec import BinMatrix, RowTuple, cols_from_rows

Visitor = Callable[[RowTuple], None]


@dataclass(frozen=True)
class LambdaSpec:
    """Order ``n`` and row/column weight ``k``."""

    n: int
    k: int

    def __post_init__(self):
        if not 1 <= self.k <= self.n <= MAX_WIDTH:
            raise ValueError(f"need 1 <= k <= n <= {MAX_WIDTH}, got n={self.n}, k={self.k}")


@dataclass
class EnumReport:
    nu: int = 0
    visited: int = 0
    pruned: int = 0
    candidate_space: int = 0

    @property
    def efficiency(self) -> Fraction:
        """Share of the candidate space that was fully checked."""
        return Fraction(self.visited, self.candidate_space) if self.candidate_space else Fraction(0)

    def merge(self, other: "EnumReport") -> None:
        self.nu += other.nu
        self.visited += other.visited
        self.pruned += other.pruned


def _as_spec(spec: Union[LambdaSpec, Tuple[int, int]]) -> LambdaSpec:
    return spec if isinstance(spec, LambdaSpec) else LambdaSpec(*spec)


def is_semicanonical(t: Union[BinMatrix, Sequence[int]], width: Optional[int] = None) -> bool:
    """True iff the row codes and the column codes are both nondecreasing.

    ``t`` is a matrix or a row-code tuple; a bare tuple is taken as square
    unless ``width`` says otherwise.
    """
    if isinstance(t, BinMatrix):
        xs, width = t.rows, t.m
    else:
        xs = tuple(t)
    if any(a > b for a, b in zip(xs, xs[1:])):
        return False
    ys = cols_from_rows(xs, width)
    return all(a <= b for a, b in zip(ys, ys[1:]))


def check_lambda_semicanonical(t: Sequence[int], spec: Union[LambdaSpec, Tuple[int, int]]) -> bool:
    """Column test for a nondecreasing tuple of weight-k rows.

    Scans columns left to right and stops at the first column that is
    smaller than its left neighbour or does not hold exactly k ones.
    """
    spec = _as_spec(spec)
    n, k = spec.n, spec.k
    prev = 0
    for j in range(n - 1, -1, -1):
        y = 0
        for i, x in enumerate(t):
            y |= bit_at(x, j, n) << (n - 1 - i)
        if y < prev or popcount(y) != k:
            return False
        prev = y
    return True


def candidate_space_size(spec: Union[LambdaSpec, Tuple[int, int]]) -> int:
    """Number of nondecreasing n-tuples over the comb(n, k) weight-k codes."""
    spec = _as_spec(spec)
    return comb(comb(spec.n, spec.k) + spec.n - 1, spec.n)


def _search(n: int, k: int, second: range, emit: Optional[Visitor]) -> EnumReport:
    """Depth-first walk with the first row fixed to ``2**k - 1``.

    Column feasibility is tracked as ``level[c]`` = bitmask of columns that
    already hold ``c`` ones. A row placed at depth ``d`` must avoid full
    columns and cover every column still short by ``n - d`` ones. After
    placing row ``x``, each later row is ``>= x`` and so has a one at or
    above the top bit of ``x``; the columns there must still be short by at
    least the number of rows left.

    Column order is tracked for adjacent column pairs (bit q+1 left of bit
    q): ``eq`` marks pairs whose prefixes still agree, ``bad`` marks pairs
    already decided left > right. Only complete tuples are accepted or
    rejected on ``bad``.
    """
    codes = k_subset_codes(n, k)
    ncodes = len(codes)
    pairs = (1 << (n - 1)) - 1
    report = EnumReport()
    prefix = [0] * n
    last = n - 1
    shortfalls = range(k - 1, -1, -1)

    def place(level, x):
        new = list(level)
        for c in shortfalls:
            moved = new[c] & x
            if moved:
                new[c] ^= moved
                new[c + 1] |= moved
        return new

    def room_above(level, x):
        high = -1 << (x.bit_length() - 1)
        return sum((k - c) * popcount(level[c] & high) for c in shortfalls)

    def extend(depth, start, stop, level, eq, bad):
        full = level[k]
        deficit = k - (n - depth)
        must = level[deficit] if deficit >= 0 else 0
        left = n - depth - 1
        for idx in range(start, stop):
            x = codes[idx]
            if x & full or x & must != must:
                report.pruned += 1
                continue
            new = place(level, x)
            if left and room_above(new, x) < left:
                report.pruned += 1
                continue
            hi = x >> 1
            eq2 = eq & ~(hi ^ x)
            bad2 = bad | (eq & hi & ~x & pairs)
            prefix[depth] = x
            if depth == last:
                report.visited += 1
                if not bad2:
                    report.nu += 1
                    if emit is not None:
                        emit(tuple(prefix))
            else:
                extend(depth + 1, idx, ncodes, new, eq2, bad2)

    level = [0] * (k + 1)
    level[0] = (1 << n) - 1
    x = codes[0]
    prefix[0] = x
    if n == 1:
        report.visited = report.nu = 1
        if emit is not None:
            emit((x,))
        return report
    # first row forced to 0...01...1; second row restricted to ``second``
    extend(1, second.start, second.stop, place(level, x), pairs & ~((x >> 1) ^ x), pairs & (x >> 1) & ~x)
    return report


def _range_worker(args):
    n, k, lo, hi, collect = args
    found: List[RowTuple] = []
    report = _search(n, k, range(lo, hi), found.append if collect else None)
    return report, found


def _split(total: int, parts: int) -> List[Tuple[int, int]]:
    parts = max(1, min(parts, total))
    bounds = [total * i // parts for i in range(parts + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(parts) if bounds[i] < bounds[i + 1]]


def enumerate_semicanonical(
    spec: Union[LambdaSpec, Tuple[int, int]],
    visitor: Optional[Visitor] = None,
    workers: int = 1,
) -> EnumReport:
    """Call ``visitor`` once per semi-canonical matrix of the family, in
    ascending lexicographic order of row codes.

    With ``workers > 1`` the range of the second row index is split across
    processes; emitted tuples are buffered per range and replayed in range
    order, so the visitor still runs in the calling process.
    """
    spec = _as_spec(spec)
    n, k = spec.n, spec.k
    ncodes = comb(n, k)
    if workers <= 1:
        report = _search(n, k, range(ncodes), visitor)
    else:
        # more chunks than workers: early ranges are much heavier
        chunks = _split(ncodes, workers * 4)
        jobs = [(n, k, lo, hi, visitor is not None) for lo, hi in chunks]
        report = EnumReport()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part, found in pool.map(_range_worker, jobs):
                report.merge(part)
                if visitor is not None:
                    for t in found:
                        visitor(t)
    report.candidate_space = candidate_space_size(spec)
    return report


def semicanonical_tuples(spec: Union[LambdaSpec, Tuple[int, int]], workers: int = 1) -> List[RowTuple]:
    found: List[RowTuple] = []
    enumerate_semicanonical(spec, found.append, workers)
    return found


def nu(spec: Union[LambdaSpec, Tuple[int, int]], workers: int = 1) -> int:
    """Number of semi-canonical matrices with k ones in every row and column."""
    return enumerate_semicanonical(spec, None, workers).nu
