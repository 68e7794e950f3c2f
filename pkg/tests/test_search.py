from __future__ import annotations

import itertools
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from forbconf import catalog
from forbconf.containment import avoids_family
from forbconf.errors import DomainError
from forbconf.matrix import BinMatrix, Family, is_simple
from forbconf.products import product
from forbconf.search import (
    check_recursion,
    decompose,
    forb_exact,
    induced_family,
    iter_avoid,
    zero_one_times,
)

from oracles import naive_avoids, naive_forb
from strategies import matrices

Q = {i: catalog.q(i) for i in range(1, 10)}

# Closed forms for forb(m, {Q_i}).
def _sauer(m):
    return comb(m, 2) + m + 1


def _quarter(m):
    return m * m // 4 + m + 1


TABLE1 = {1: _sauer, 2: _sauer, 3: _quarter, 4: _sauer, 5: _sauer, 6: _sauer, 7: _sauer, 8: _quarter,
          9: lambda m: comb(m, 2) + 2 * m - 1}


@pytest.mark.parametrize("i", range(1, 10))
@pytest.mark.parametrize("m", [2, 3, 4])
def test_single_q_matches_closed_form(i, m):
    res = forb_exact(m, [Q[i]])
    assert res.forb_value == TABLE1[i](m)
    assert is_simple(res.witness) and avoids_family(res.witness, [Q[i]])


def test_examples():
    assert forb_exact(3, [Q[6]]).forb_value == 7
    assert forb_exact(3, [Q[1], Q[2]]).forb_value == 6
    assert forb_exact(5, [Q[1], Q[2]]).forb_value == 4
    assert forb_exact(4, [Q[3]]).forb_value == 9
    assert forb_exact(3, [Q[9]]).forb_value == 8
    res = forb_exact(2, [])
    assert res.forb_value == 4 and res.witness.cols == (0, 1, 2, 3)


def test_range_checked():
    for m in (0, 9):
        with pytest.raises(DomainError):
            forb_exact(m, [Q[1]])


def test_witness_is_lexicographically_least():
    # {Q_6} at m = 3: the maximum sets have 7 columns; drop the smallest possible
    m = 3
    fam = [Q[6]]
    best = None
    for cols in itertools.combinations(range(8), 7):
        if naive_avoids(BinMatrix(m, cols), fam):
            best = cols
            break
    assert forb_exact(m, fam).witness.cols == best


FAMILIES_SMALL = [
    [Q[1]], [Q[3]], [Q[8]], [Q[6], Q[9]], [catalog.ones(2)], [catalog.identity(2)],
    [catalog.zeros(1, 2), catalog.all_ones(1, 2)], [catalog.triangular(2)], [catalog.cycle(3)],
    [BinMatrix.from_columns(["10", "10", "01"])],
]


@pytest.mark.parametrize("fam", FAMILIES_SMALL)
def test_agrees_with_brute_force_at_m3(fam):
    assert forb_exact(3, fam).forb_value == naive_forb(3, fam)


@given(st.lists(matrices(max_rows=3, max_cols=3, min_cols=1), min_size=1, max_size=2))
@settings(max_examples=200)
def test_random_families_agree_with_brute_force(fam):
    for m in (1, 2, 3):
        res = forb_exact(m, fam)
        assert res.forb_value == naive_forb(m, fam)
        assert naive_avoids(res.witness, fam) and is_simple(res.witness)


def test_workers_and_symmetry_give_same_value():
    for fam in ([Q[9]], [Q[6], Q[7]], [Q[1], Q[2]]):
        base = forb_exact(5, fam)
        assert forb_exact(5, fam, symmetry=True).forb_value == base.forb_value
        par = forb_exact(5, fam, workers=2)
        assert par.forb_value == base.forb_value
        assert avoids_family(par.witness, fam)


def test_single_worker_is_deterministic():
    a = forb_exact(4, [Q[6], Q[9]])
    b = forb_exact(4, [Q[6], Q[9]])
    assert (a.witness, a.nodes_expanded) == (b.witness, b.nodes_expanded)


def test_iter_avoid_counts():
    # every simple 3-rowed matrix avoiding 1_1... only the zero column is allowed
    assert [A.cols for A in iter_avoid(3, [catalog.ones(1)])] == [(), (0,)]
    got = sorted(A.cols for A in iter_avoid(3, [Q[6]]))
    want = sorted(
        cols for n in range(9) for cols in itertools.combinations(range(8), n)
        if naive_avoids(BinMatrix(3, cols), [Q[6]])
    )
    assert got == want


CATALOG_SMALL = [Q[1], Q[2], Q[4], Q[5], Q[6], Q[7], Q[8], Q[9], catalog.identity(2), catalog.ones(2), catalog.triangular(2)]


def test_monotone_in_family():
    for F, G in itertools.combinations(CATALOG_SMALL, 2):
        for m in (3, 4):
            both = forb_exact(m, [F, G]).forb_value
            assert both <= forb_exact(m, [F]).forb_value
            assert both <= forb_exact(m, [G]).forb_value


@pytest.mark.parametrize("F", CATALOG_SMALL)
def test_complement_symmetry(F):
    from forbconf.matrix import complement

    for m in (3, 4):
        assert forb_exact(m, [F]).forb_value == forb_exact(m, [complement(F)]).forb_value


def test_superconfiguration_irrelevant():
    pairs = [(catalog.identity(2), catalog.identity(3)), (Q[1], catalog.zeros(3, 2)),
             (catalog.ones(2), Q[5]), (catalog.identity(2), Q[8]), (Q[6], product(catalog.identity(3), catalog.ones(1)))]
    for F, F2 in pairs:
        for m in (2, 3, 4):
            assert forb_exact(m, [F, F2]).forb_value == forb_exact(m, [F]).forb_value


# --- decomposition -----------------------------------------------------------


def test_decompose_examples():
    d = decompose(BinMatrix(2, (0, 1, 2, 3)), 1)
    assert d.C.cols == (0, 1) and d.B.ncols == 0 and d.D.ncols == 0
    d = decompose(catalog.identity(2), 1)
    assert d.B.cols == (1,) and d.D.cols == (0,) and d.C.ncols == 0
    with pytest.raises(DomainError):
        decompose(BinMatrix(2, (1, 1)), 1)


@given(matrices(min_rows=2, max_rows=6, max_cols=20, simple=True), st.data())
def test_decomposition_identity(A, data):
    r = data.draw(st.integers(1, A.rows))
    d = decompose(A, r)
    assert A.ncols == d.B.ncols + 2 * d.C.ncols + d.D.ncols
    assert sorted(d.reassemble().cols) == sorted(A.cols)


# --- induced family and recursion ------------------------------------------------


def _has(fam, F):
    return F in Family(fam)


def test_induced_family_examples():
    G = induced_family([Q[8], zero_one_times(catalog.zeros(2, 2))], 2, 4)
    assert _has(G, catalog.identity(2)) and _has(G, catalog.zeros(2, 2))
    ZO = BinMatrix(1, (0, 1))
    G = induced_family([Q[8], product(BinMatrix(1, (0, 1, 0, 1)), ZO)], 2, 4)
    assert _has(G, catalog.identity(2)) and _has(G, BinMatrix(1, (0, 1, 0, 1)))
    assert len(induced_family([], 2, 2)) == 0


@given(st.lists(matrices(max_rows=2, max_cols=3, min_cols=1), min_size=1, max_size=2))
@settings(max_examples=30)
def test_induced_family_is_minimal_and_lifts(fam):
    from forbconf.containment import contains, is_minimal

    G = induced_family(fam, 2, 3)
    assert is_minimal(G)
    for H in G:
        assert any(contains(zero_one_times(H), F) for F in fam)


def test_recursion_examples():
    assert check_recursion(4, [Q[8], zero_one_times(catalog.zeros(1, 2))])
    r = check_recursion(3, [Q[6]])
    assert r.forb_m == 7 and r.forb_prev == 4 and r.holds
    r = check_recursion(2, [])
    assert (r.forb_m, r.forb_prev, r.forb_induced) == (4, 2, 2)


@given(
    st.lists(matrices(max_rows=3, max_cols=4, min_cols=1), min_size=1, max_size=2),
    matrices(max_rows=3, max_cols=4, min_cols=1),
)
def test_monotone_in_family_random(fam, extra):
    for m in range(1, 5):
        assert forb_exact(m, fam + [extra]).forb_value <= forb_exact(m, fam).forb_value


@given(matrices(max_rows=3, max_cols=3, min_cols=1), st.data())
def test_superconfiguration_irrelevant_random(F, data):
    # F' = F with an extra column and possibly an extra top row, so F ≺ F'
    col = data.draw(st.integers(0, 2**F.rows - 1))
    F2 = BinMatrix(F.rows, F.cols + (col,))
    if data.draw(st.booleans()):
        top = data.draw(st.lists(st.integers(0, 1), min_size=F2.ncols, max_size=F2.ncols))
        F2 = BinMatrix(F2.rows + 1, tuple((b << F2.rows) | c for b, c in zip(top, F2.cols)))
    for m in range(1, 5):
        assert forb_exact(m, [F, F2]).forb_value == forb_exact(m, [F]).forb_value
