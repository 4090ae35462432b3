"""Canonical forms under independent row and column permutations.

The canonical matrix of a class is the member whose row-code tuple is
lexicographically smallest. For a fixed column arrangement the smallest row
tuple is simply the sorted one, so only column orders are searched.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from .codec import BinMatrix, RowTuple, cols_of
from .semicanon import LambdaSpec, _as_spec, enumerate_semicanonical, is_semicanonical

Permutation = Tuple[int, ...]

DEFAULT_BUDGET_M = 10


class BudgetExceeded(ValueError):
    """The factorial search was refused because the size is over budget."""


@dataclass
class CanonReport:
    mu: int = 0
    semi_count: int = 0
    canonical_reps: Optional[List[RowTuple]] = field(default=None, repr=False)


def identity(n: int) -> Permutation:
    return tuple(range(n))


def transposition(n: int, u: int, v: int) -> Permutation:
    if u == v:
        raise ValueError("a transposition swaps two distinct indices")
    p = list(range(n))
    p[u], p[v] = p[v], p[u]
    return tuple(p)


def is_permutation(p: Sequence[int], n: int) -> bool:
    return len(p) == n and sorted(p) == list(range(n))


def permute_bits(x: int, colp: Sequence[int], m: int) -> int:
    """Row code whose column ``j`` is column ``colp[j]`` of ``x``."""
    y = 0
    for j in colp:
        y = (y << 1) | ((x >> (m - 1 - j)) & 1)
    return y


def apply_perms(a: BinMatrix, rowp: Sequence[int], colp: Sequence[int]) -> BinMatrix:
    """Entry (i, j) of the result is entry (rowp[i], colp[j]) of ``a``."""
    if not is_permutation(rowp, a.n):
        raise ValueError(f"row permutation {tuple(rowp)} is not a permutation of {a.n} indices")
    if not is_permutation(colp, a.m):
        raise ValueError(f"column permutation {tuple(colp)} is not a permutation of {a.m} indices")
    return BinMatrix(a.n, a.m, tuple(permute_bits(a.rows[i], colp, a.m) for i in rowp))


def sort_rows(a: BinMatrix) -> BinMatrix:
    return BinMatrix(a.n, a.m, tuple(sorted(a.rows)))


def sort_cols(a: BinMatrix) -> BinMatrix:
    return sort_rows(a.transpose()).transpose()


def sort_passes(a: BinMatrix) -> Iterator[Tuple[str, BinMatrix]]:
    """Alternate row sorting and column sorting, yielding each change.

    A row sort that changes the matrix lowers its column tuple and a column
    sort that changes it lowers its row tuple, so the loop terminates.
    """
    while True:
        changed = False
        b = sort_rows(a)
        if b != a:
            yield "rows", b
            a, changed = b, True
        b = sort_cols(a)
        if b != a:
            yield "cols", b
            a, changed = b, True
        if not changed:
            return


def sort_normalize(a: BinMatrix) -> BinMatrix:
    """An equivalent semi-canonical matrix, reached by repeated sorting."""
    for _, a in sort_passes(a):
        pass
    return a


def _check_budget(a: BinMatrix, budget_m: int) -> None:
    if a.m > budget_m:
        raise BudgetExceeded(
            f"column-permutation search over {a.m}! orders refused: m={a.m} exceeds budget_m={budget_m}"
        )


def _orbit_search(a: BinMatrix, bound: RowTuple, first_below: bool) -> Optional[RowTuple]:
    """Branch and bound over column orders, rows re-sorted per order.

    Columns are placed left to right. With ``d`` columns placed, the sorted
    partial rows padded with zeros are an elementwise lower bound on the
    sorted full rows of every completion, so a branch dies once that bound
    reaches ``bound``. Returns the smallest row tuple strictly below
    ``bound``, or None. With ``first_below`` the first such tuple is
    returned instead.
    """
    n, m = a.n, a.m
    cols = cols_of(a)
    shifts = [n - 1 - i for i in range(n)]
    best: Optional[RowTuple] = None
    limit = bound
    used = [False] * m

    def descend(depth, partial):
        nonlocal best, limit
        rest = m - depth
        if rest == 0:
            cand = tuple(sorted(partial))
            if cand < limit:
                best = limit = cand
                return first_below
            return False
        tried = set()
        for j in range(m):
            y = cols[j]
            if used[j] or y in tried:
                continue
            tried.add(y)
            nxt = [(p << 1) | ((y >> s) & 1) for p, s in zip(partial, shifts)]
            lower = tuple(p << (rest - 1) for p in sorted(nxt))
            if lower >= limit:
                continue
            used[j] = True
            done = descend(depth + 1, nxt)
            used[j] = False
            if done:
                return True
        return False

    descend(0, [0] * n)
    return best


def canonical_form(a: BinMatrix, budget_m: int = DEFAULT_BUDGET_M) -> BinMatrix:
    """The member of the class of ``a`` with the smallest row tuple."""
    _check_budget(a, budget_m)
    # any member is an upper bound; a sorted one is usually close
    start = sort_normalize(a)
    best = _orbit_search(a, start.rows, first_below=False)
    return start if best is None else BinMatrix(a.n, a.m, best)


def is_canonical(a: BinMatrix, budget_m: int = DEFAULT_BUDGET_M) -> bool:
    _check_budget(a, budget_m)
    if not is_semicanonical(a):
        return False
    return _orbit_search(a, a.rows, first_below=True) is None


def are_equivalent(a: BinMatrix, b: BinMatrix, budget_m: int = DEFAULT_BUDGET_M) -> bool:
    """True iff ``b`` is a row and column rearrangement of ``a``."""
    if (a.n, a.m) != (b.n, b.m):
        return False
    # weights are invariant; cheap rejection before the search
    if sorted(map(int.bit_count, a.rows)) != sorted(map(int.bit_count, b.rows)):
        return False
    if sorted(map(int.bit_count, cols_of(a))) != sorted(map(int.bit_count, cols_of(b))):
        return False
    return canonical_form(a, budget_m) == canonical_form(b, budget_m)


def mu(
    spec: Union[LambdaSpec, Tuple[int, int]],
    keep_reps: bool = False,
    budget_m: int = DEFAULT_BUDGET_M,
    workers: int = 1,
) -> CanonReport:
    """Count equivalence classes by keeping the canonical semi-canonical matrices."""
    spec = _as_spec(spec)
    if spec.n > budget_m:
        raise BudgetExceeded(
            f"class count for n={spec.n} needs {spec.n}! column orders per candidate; exceeds budget_m={budget_m}"
        )
    report = CanonReport(canonical_reps=[] if keep_reps else None)

    def visit(t):
        report.semi_count += 1
        if is_canonical(BinMatrix(spec.n, spec.n, t), budget_m):
            report.mu += 1
            if keep_reps:
                report.canonical_reps.append(t)

    enumerate_semicanonical(spec, visit, workers)
    return report
