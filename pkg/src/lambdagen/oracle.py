"""Brute-force ground truth for small sizes.

Nothing here reuses the fast generator or the canonical-form search:
matrices are lists of 0/1 rows, rows come from ``itertools.combinations``
and orbits from explicit ``itertools.permutations`` loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Callable, Dict, Iterator, List, Optional, Set, Tuple

from .codec import BinMatrix
from .semicanon import _as_spec

Grid = Tuple[Tuple[int, ...], ...]

ENUM_BUDGET_N = 6
ORBIT_BUDGET = 5


class OracleBudgetExceeded(ValueError):
    pass


@dataclass
class OracleReport:
    lambda_size: int
    semi_size: int
    class_count: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.semi_size, self.lambda_size)


def _grid(a: BinMatrix) -> Grid:
    return tuple(tuple(row) for row in a.grid())


def _code(bits) -> int:
    v = 0
    for b in bits:
        v = 2 * v + b
    return v


def row_codes(g: Grid) -> Tuple[int, ...]:
    return tuple(_code(row) for row in g)


def col_codes(g: Grid) -> Tuple[int, ...]:
    return tuple(_code(col) for col in zip(*g))


def grid_semicanonical(g: Grid) -> bool:
    r, c = row_codes(g), col_codes(g)
    return list(r) == sorted(r) and list(c) == sorted(c)


def iter_lambda(n: int, k: int, budget_n: int = ENUM_BUDGET_N) -> Iterator[Grid]:
    """Every n x n grid with k ones per row and column, row by row."""
    if n > budget_n:
        raise OracleBudgetExceeded(f"exhaustive enumeration refused: n={n} exceeds budget {budget_n}")
    choices = []
    for ones in combinations(range(n), k):
        choices.append(tuple(1 if j in ones else 0 for j in range(n)))
    colsum = [0] * n
    rows: List[Tuple[int, ...]] = []

    def rec(i):
        if i == n:
            if all(s == k for s in colsum):
                yield tuple(rows)
            return
        left = n - i - 1
        for row in choices:
            ok = True
            for j in range(n):
                s = colsum[j] + row[j]
                if s > k or s + left < k:
                    ok = False
                    break
            if not ok:
                continue
            for j in range(n):
                colsum[j] += row[j]
            rows.append(row)
            yield from rec(i + 1)
            rows.pop()
            for j in range(n):
                colsum[j] -= row[j]

    yield from rec(0)


def enumerate_lambda(spec, visitor: Optional[Callable[[BinMatrix], None]] = None,
                     budget_n: int = ENUM_BUDGET_N) -> int:
    spec = _as_spec(spec)
    n, k = spec.n, spec.k
    count = 0
    for g in iter_lambda(n, k, budget_n):
        count += 1
        if visitor is not None:
            visitor(BinMatrix.from_grid(g))
    return count


def orbit(g: Grid) -> Set[Grid]:
    """All row and column rearrangements of ``g``."""
    n, m = len(g), len(g[0])
    out = set()
    for rp in permutations(range(n)):
        rows = [g[i] for i in rp]
        for cp in permutations(range(m)):
            out.add(tuple(tuple(row[j] for j in cp) for row in rows))
    return out


def _orbit_guard(n: int, m: int, budget: int) -> None:
    if n > budget or m > budget:
        raise OracleBudgetExceeded(f"orbit search refused: {n}x{m} exceeds {budget}x{budget}")


def oracle_canonical_min(a: BinMatrix, budget: int = ORBIT_BUDGET) -> Tuple[int, ...]:
    """Smallest row tuple over all n! * m! rearrangements of ``a``."""
    _orbit_guard(a.n, a.m, budget)
    return min(row_codes(h) for h in orbit(_grid(a)))


def oracle_col_min(a: BinMatrix, budget: int = ORBIT_BUDGET) -> Tuple[int, ...]:
    _orbit_guard(a.n, a.m, budget)
    return min(col_codes(h) for h in orbit(_grid(a)))


def lambda_classes(n: int, k: int, budget: int = ORBIT_BUDGET) -> List[List[Grid]]:
    """Partition of the whole family into equivalence classes."""
    _orbit_guard(n, n, budget)
    seen: Dict[Grid, int] = {}
    classes: List[List[Grid]] = []
    for g in iter_lambda(n, k):
        if g in seen:
            continue
        members = sorted(orbit(g), key=row_codes)
        for h in members:
            seen[h] = len(classes)
        classes.append(members)
    return classes


def oracle_semicanonical(n: int, k: int, budget_n: int = ENUM_BUDGET_N) -> List[Tuple[int, ...]]:
    """Row tuples of the semi-canonical members, ascending."""
    return sorted(row_codes(g) for g in iter_lambda(n, k, budget_n) if grid_semicanonical(g))


def oracle_report(spec, budget: int = ORBIT_BUDGET) -> OracleReport:
    spec = _as_spec(spec)
    n, k = spec.n, spec.k
    _orbit_guard(n, n, budget)
    classes = lambda_classes(n, k, budget)
    lam = sum(len(c) for c in classes)
    semi = sum(1 for c in classes for g in c if grid_semicanonical(g))
    return OracleReport(lambda_size=lam, semi_size=semi, class_count=len(classes))
