from __future__ import annotations

import pytest

from forbconf import catalog
from forbconf.containment import avoids_family, config_equal, contains
from forbconf.errors import DomainError, ParseError
from forbconf.graphs import SimpleGraph, cycle_graph, path_graph
from forbconf.matrix import BinMatrix, complement, is_simple, restrict_rows
from forbconf.products import product


def C(*columns: str) -> BinMatrix:
    return BinMatrix.from_columns(list(columns))


def test_triangular_columns():
    assert catalog.triangular(3) == C("100", "110", "111")


def test_q8_is_zero_one_times_identity():
    assert config_equal(catalog.q(8), product(BinMatrix(1, (0, 1)), catalog.identity(2)))


def test_c4_is_identity_squared():
    assert config_equal(catalog.cycle(4), product(catalog.identity(2), catalog.identity(2)))


def test_q3_is_f2_with_t_two():
    assert config_equal(catalog.make("F2_1tt1", 2), catalog.q(3))


def test_q_rows_as_printed():
    assert catalog.q(3).row_strings() == ["000111", "011001"]
    assert catalog.q(9).shape == (4, 2)


def test_q_simplicity_matches_table():
    # Q1, Q2 and Q3 repeat a column as printed; the rest are simple
    expected = {1: False, 2: False, 3: False, 4: True, 5: True, 6: True, 7: True, 8: True, 9: True}
    assert {i: is_simple(catalog.q(i)) for i in range(1, 10)} == expected


@pytest.mark.parametrize("k", range(1, 9))
def test_identity_complement(k):
    assert complement(catalog.identity(k)) == catalog.identity_complement(k)


@pytest.mark.parametrize("k", range(3, 9))
def test_cycle_shape(k):
    Ck = catalog.cycle(k)
    assert Ck.shape == (k, k)
    assert set(Ck.column_sums()) == {2}


def test_cycle_too_short():
    with pytest.raises(DomainError):
        catalog.make("C", 2)


@pytest.mark.parametrize("t", range(1, 6))
def test_f_tower_shape(t):
    F = catalog.make("F_tower", t)
    assert F.shape == (t + 1, 2 * t + 2)
    assert config_equal(restrict_rows(F, {1, 2}), catalog.f2(t))


def test_constant_construction_examples():
    A = catalog.make_constant_construction(4, 2, 2, 2, 2)
    assert A.row_strings() == ["10", "01", "10", "10"]
    assert A.cols == (0b1011, 0b0100)
    assert catalog.make_constant_construction(2, 2, 2, 2, 2) == catalog.identity(2)
    assert catalog.make_constant_construction(3, 2, 3, 2, 2) == catalog.identity(3)


@pytest.mark.parametrize("params", [(2, 2, 2, 2), (2, 3, 2, 2), (2, 2, 2, 3), (3, 3, 2, 2), (2, 3, 3, 3)])
def test_constant_construction_avoids(params):
    k, l, p, q = params
    for m in range(6, 9):
        A = catalog.make_constant_construction(m, k, l, p, q)
        assert A.shape == (m, l + q - 2)
        assert is_simple(A)
        assert all(r.count("1") == q - 1 for r in A.row_strings())
        assert avoids_family(A, [catalog.zeros(k, l), catalog.all_ones(p, q)])


def test_constant_construction_m_too_small():
    with pytest.raises(DomainError):
        catalog.make_constant_construction(3, 2, 3, 2, 3)  # needs C(3,2) = 3 rows... and 4 for (3,3)
    with pytest.raises(DomainError):
        catalog.make_constant_construction(5, 2, 3, 2, 3)


def test_graph_incidence_examples():
    assert catalog.graph_incidence(SimpleGraph(2, ((1, 2),))) == C("11")
    assert config_equal(catalog.graph_incidence(cycle_graph(3)), catalog.cycle(3))
    assert catalog.graph_incidence(path_graph(3)) == C("110", "011")
    with pytest.raises(DomainError):
        SimpleGraph(2, ((1, 1),))
    with pytest.raises(DomainError):
        SimpleGraph(2, ((1, 2), (2, 1)))


def test_parse_name():
    assert catalog.parse_name("zeros:2,3") == catalog.zeros(2, 3)
    assert catalog.parse_name("Ic:4xT:4") == product(catalog.identity_complement(4), catalog.triangular(4))
    assert catalog.parse_name("Q6") == catalog.q(6)
    assert catalog.parse_name("Ftower:2") == catalog.f_tower(2)
    for bad in ["Q10", "I:x", "foo:1", "Ix", "C:2"]:
        with pytest.raises(ParseError):
            catalog.parse_name(bad)


def test_table_constructions_avoid_their_q():
    for i, constructions in catalog.Q_CONSTRUCTIONS.items():
        for a, b in constructions:
            P = product(catalog.block(a, 4), catalog.block(b, 4))
            assert not contains(P, catalog.q(i)), (i, a, b)
