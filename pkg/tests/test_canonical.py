import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from lambdagen.canonical import (
    BudgetExceeded,
    CanonReport,
    apply_perms,
    are_equivalent,
    canonical_form,
    identity,
    is_canonical,
    is_permutation,
    mu,
    sort_cols,
    sort_normalize,
    sort_passes,
    sort_rows,
    transposition,
)
from lambdagen.codec import BinMatrix, cols_of, rows_of
from lambdagen.oracle import oracle_canonical_min
from lambdagen.semicanon import is_semicanonical


def random_matrix(rng, n, m):
    return BinMatrix(n, m, tuple(rng.randrange(1 << m) for _ in range(n)))


def random_perm(rng, n):
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)


@st.composite
def matrices(draw, max_n=6, max_m=6):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    rows = draw(st.lists(st.integers(0, 2**m - 1), min_size=n, max_size=n))
    return BinMatrix(n, m, tuple(rows))


def partitions_min_part(n, smallest=2):
    """Partitions of n into parts >= smallest."""
    if n == 0:
        return 1
    return sum(partitions_min_part(n - p, p) for p in range(smallest, n + 1))


def test_permutation_helpers():
    assert identity(3) == (0, 1, 2)
    assert transposition(4, 1, 3) == (0, 3, 2, 1)
    assert is_permutation((2, 0, 1), 3)
    assert not is_permutation((0, 0, 1), 3)
    with pytest.raises(ValueError):
        transposition(3, 1, 1)


def test_apply_identity(ex_a):
    assert apply_perms(ex_a, identity(4), identity(4)) == ex_a


def test_apply_entrywise():
    rng = random.Random(5)
    for _ in range(50):
        a = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        rp, cp = random_perm(rng, a.n), random_perm(rng, a.m)
        b = apply_perms(a, rp, cp)
        assert all(b.entry(i, j) == a.entry(rp[i], cp[j]) for i in range(a.n) for j in range(a.m))


def test_example_witness(ex_a, ex_b):
    witnesses = [
        (rp, cp)
        for rp in itertools.permutations(range(4))
        for cp in itertools.permutations(range(4))
        if apply_perms(ex_b, rp, cp) == ex_a
    ]
    assert witnesses
    rp, cp = witnesses[0]
    assert apply_perms(ex_b, rp, cp) == ex_a


def test_row_swap_display():
    # swapping rows u and v exchanges exactly those two rows
    rng = random.Random(9)
    a = random_matrix(rng, 6, 5)
    u, v = 1, 4
    xa = apply_perms(a, transposition(6, u, v), identity(5))
    g, h = a.grid(), xa.grid()
    assert h[u] == g[v] and h[v] == g[u]
    assert all(h[i] == g[i] for i in range(6) if i not in (u, v))


def test_apply_rejects_bad_lengths(ex_a):
    with pytest.raises(ValueError):
        apply_perms(ex_a, (0, 1, 2), identity(4))
    with pytest.raises(ValueError):
        apply_perms(ex_a, identity(4), (0, 1, 2, 2))


def test_sort_normalize_examples(ex_a, ex_b):
    assert sort_normalize(ex_a) == ex_a
    assert sort_normalize(ex_b) == ex_b
    reversed_a = BinMatrix(4, 4, tuple(reversed(ex_a.rows)))
    assert sort_normalize(reversed_a) == ex_a


def test_sort_normalize_random():
    rng = random.Random(11)
    for _ in range(1000):
        a = random_matrix(rng, rng.randint(1, 7), rng.randint(1, 7))
        b = sort_normalize(a)
        assert is_semicanonical(b)
        assert sort_rows(b) == b and sort_cols(b) == b
        if a.n <= 4 and a.m <= 4:
            assert oracle_canonical_min(a) == oracle_canonical_min(b)


def test_sort_passes_strictly_decrease_measure():
    rng = random.Random(12)
    for _ in range(500):
        a = random_matrix(rng, rng.randint(1, 8), rng.randint(1, 8))
        prev = a
        for kind, b in sort_passes(a):
            if kind == "rows":
                assert cols_of(b) < cols_of(prev)
            else:
                assert rows_of(b) < rows_of(prev)
            prev = b


def test_canonical_form_examples(ex_a, ex_b):
    ca = canonical_form(ex_a)
    assert ca == canonical_form(ex_b)
    assert rows_of(ca) <= rows_of(ex_b)
    # exhaustive 4!*4! minimum
    assert rows_of(ca) == oracle_canonical_min(ex_a) == (3, 5, 11, 14)
    ones = BinMatrix(3, 3, (7, 7, 7))
    assert canonical_form(ones) == ones


def test_canonical_form_budget():
    a = BinMatrix(2, 11, (1, 2))
    with pytest.raises(BudgetExceeded, match="budget_m=10"):
        canonical_form(a)
    assert canonical_form(a, budget_m=11).rows == (1, 2)
    with pytest.raises(BudgetExceeded):
        is_canonical(BinMatrix(1, 4, (1,)), budget_m=3)


@settings(max_examples=150, deadline=None)
@given(matrices(), st.randoms(use_true_random=False))
def test_canonical_form_orbit_invariant(a, rnd):
    c = canonical_form(a)
    b = apply_perms(a, random_perm(rnd, a.n), random_perm(rnd, a.m))
    assert canonical_form(b) == c
    assert canonical_form(c) == c
    assert is_canonical(c)
    assert are_equivalent(a, b)


def test_is_canonical_examples(ex_a):
    assert not is_canonical(ex_a)
    assert is_canonical(BinMatrix(4, 4, (15,) * 4))
    assert is_canonical(canonical_form(ex_a))


@settings(max_examples=200, deadline=None)
@given(matrices(max_n=5, max_m=5))
def test_canonical_implies_semicanonical(a):
    if is_canonical(a):
        assert is_semicanonical(a)
    assert is_canonical(a) == (rows_of(a) == oracle_canonical_min(a))


def test_are_equivalent_examples(ex_a, ex_b):
    assert are_equivalent(ex_a, ex_b)
    assert are_equivalent(ex_a, ex_a)
    assert not are_equivalent(BinMatrix(3, 3, (7, 7, 7)), BinMatrix(3, 3, (3, 5, 6)))
    assert not are_equivalent(BinMatrix(2, 3, (1, 2)), BinMatrix(3, 2, (1, 2, 0)))
    # same row and column weights but different classes
    assert not are_equivalent(BinMatrix(6, 6, (3, 3, 12, 12, 48, 48)), BinMatrix(6, 6, (3, 5, 6, 24, 40, 48)))


def test_mu_examples():
    r = mu((3, 2))
    assert isinstance(r, CanonReport)
    assert (r.mu, r.semi_count) == (1, 1)
    for k in range(1, 6):
        assert mu((k, k)).mu == 1
    # oracle partition of all 90 members gives two classes
    assert mu((4, 2)).mu == 2


@pytest.mark.parametrize("n", range(2, 9))
def test_mu_two_ones_counts_cycle_types(n):
    # a 2-regular bipartite multigraph is a union of even cycles of lengths 2*parts
    assert mu((n, 2)).mu == partitions_min_part(n)


def test_mu_reps_are_canonical_and_distinct():
    r = mu((6, 3), keep_reps=True)
    assert r.mu == len(r.canonical_reps) == len(set(r.canonical_reps))
    forms = {canonical_form(BinMatrix(6, 6, t)).rows for t in r.canonical_reps}
    assert forms == set(r.canonical_reps)
    assert mu((6, 3), workers=2).mu == r.mu


def test_mu_budget():
    with pytest.raises(BudgetExceeded):
        mu((6, 2), budget_m=5)


def test_theorem_row_transposition_decreases_columns():
    rng = random.Random(21)
    trials = 0
    while trials < 2000:
        n, m = rng.randint(2, 8), rng.randint(1, 8)
        a = random_matrix(rng, n, m)
        u, v = rng.sample(range(n), 2)
        xa = apply_perms(a, transposition(n, u, v), identity(m))
        if rows_of(xa) < rows_of(a):
            trials += 1
            assert cols_of(xa) < cols_of(a)


def test_theorem_column_transposition_decreases_rows():
    rng = random.Random(22)
    trials = 0
    while trials < 2000:
        n, m = rng.randint(1, 8), rng.randint(2, 8)
        a = random_matrix(rng, n, m)
        u, v = rng.sample(range(m), 2)
        ay = apply_perms(a, identity(n), transposition(m, u, v))
        if cols_of(ay) < cols_of(a):
            trials += 1
            assert rows_of(ay) < rows_of(a)


@pytest.mark.parametrize("rows,width", [((1, 6, 6), 3), ((3, 3, 12, 20, 24), 5)])
def test_row_minimal_need_not_be_column_minimal(rows, width):
    # the canonical (row-minimal) member is not the column-minimal one here
    a = BinMatrix(len(rows), width, rows)
    assert rows_of(a) == oracle_canonical_min(a)
    assert is_canonical(a)
    assert not is_canonical(a.transpose())
    assert cols_of(a) > rows_of(canonical_form(a.transpose()))
