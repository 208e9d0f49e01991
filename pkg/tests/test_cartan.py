import random
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cartanshift.cartan import (CartanBettiTable, QuotientModule, _connecting_rank_explicit,
                                betti_of_module, boundary_matrix, cartan_betti_closed,
                                cartan_betti_closed_table, cartan_betti_direct, chain_dim,
                                compositions, connecting_map_rank, connecting_ranks_from_table,
                                is_proper_sequence)
from cartanshift.errors import NotStable
from cartanshift.exterior import ExtIdeal, basis, random_invertible, substitute
from cartanshift.generators import all_stable_ideals
from cartanshift.linalg import Matrix
from strategies import graded_ideals, stable_ideals

Q = 2**31 - 1


def maximal_ideal(n):
    return ExtIdeal(n, [frozenset()] + [frozenset(basis(n, d)) for d in range(1, n + 1)], Q)


def test_compositions():
    assert compositions(2, 2) == ((2, 0), (1, 1), (0, 2))
    for i in range(5):
        for p in range(1, 4):
            assert len(compositions(i, p)) == comb(i + p - 1, p - 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_exterior_algebra_oracle(n):
    # E is free over the exterior algebra of the sequence, so only H_0 survives
    t = cartan_betti_direct(ExtIdeal.zero(n, Q), n + 2)
    for (i, j, p), v in t.entries.items():
        assert v == (comb(n - p, j) if i == 0 else 0)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_residue_field_oracle(n):
    # E/m = K: the Cartan complex has zero differential and lives in j = i
    for method in ("strands", "matrices"):
        t = cartan_betti_direct(maximal_ideal(n), n + 2, method=method)
        for (i, j, p), v in t.entries.items():
            assert v == (comb(i + p - 1, p - 1) if j == i else 0)


def test_principal_linear_oracle():
    # E/(e_1) over E has the periodic resolution ... -e1-> E(-2) -e1-> E(-1) -e1-> E
    n = 4
    t = cartan_betti_direct(ExtIdeal.from_monomials(n, [(1,)], Q), 6, p_values=[n])
    for (i, j, p), v in t.entries.items():
        assert v == (1 if j == i else 0)


def test_fixture_e12():
    j = ExtIdeal.from_monomials(3, [(1, 2)], Q)
    t = cartan_betti_direct(j, 5)
    assert [t[(0, d, 1)] for d in range(4)] == [1, 2, 0, 0]
    assert all(t[(1, d, 1)] == 0 for d in range(5))
    assert [t[(i, i + 1, 3)] for i in range(1, 6)] == [1, 2, 3, 4, 5]
    assert all(t[(i, d, 3)] == 0 for i in range(1, 6) for d in range(9) if d != i + 1)
    assert cartan_betti_closed(j, 2, 3, 3) == 2


def test_closed_rejects_non_stable():
    with pytest.raises(NotStable):
        cartan_betti_closed(ExtIdeal.from_monomials(3, [(1, 3)], Q), 0, 0, 1)
    with pytest.raises(NotStable):
        cartan_betti_direct(ExtIdeal.from_monomials(3, [(1, 3)], Q), method="strands")


@pytest.mark.parametrize("n", [1, 2, 3])
def test_three_routes_agree_exhaustively(n):
    for j in all_stable_ideals(n, Q):
        closed = cartan_betti_closed_table(j)
        assert not cartan_betti_direct(j).differs(closed)
        assert not cartan_betti_direct(j, method="matrices").differs(closed)


@given(stable_ideals(n_min=4, n_max=5))
def test_strands_match_closed(j):
    assert not cartan_betti_direct(j).differs(cartan_betti_closed_table(j))


@given(graded_ideals(n_max=4), st.integers(1, 4), st.integers(1, 4), st.integers(0, 8))
def test_boundary_squares_to_zero(j, p, i, jdeg):
    p = min(p, j.n)
    mod = QuotientModule(j)
    d_i = boundary_matrix(mod, p, i, jdeg)
    d_next = boundary_matrix(mod, p, i + 1, jdeg)
    assert (d_i.nrows, d_i.ncols) == (chain_dim(mod, p, i - 1, jdeg), chain_dim(mod, p, i, jdeg))
    if d_i.ncols and d_next.ncols:
        assert (d_i @ d_next).is_zero()


def test_boundary_matrix_fixture():
    # E/(e12) on 3 variables, p = 1 (sequence e_3), i = 1, jdeg = 1:
    # C_1 = M_0 (x) x^(1) -> C_0 = M_1, 1 |-> e_3
    m = boundary_matrix(ExtIdeal.from_monomials(3, [(1, 2)], Q), 1, 1, 1)
    assert m.to_dense() == [[0], [0], [1]]


@given(graded_ideals(n_max=4))
def test_hilbert_of_h0(j):
    # beta_{0,j,1} is the Hilbert function of M / v_1 M, bounded by that of M
    t = cartan_betti_direct(j, 1)
    mod_h = j.quotient_hilbert()
    for d in range(j.n + 1):
        assert t[(0, d, 1)] <= mod_h[d]


def test_truncation_and_json():
    j = ExtIdeal.from_monomials(3, [(1, 2)], Q)
    t = cartan_betti_direct(j, 3)
    tt = cartan_betti_direct(j, 3, truncate_above_p=True)
    assert tt.truncated_above_p and not t.truncated_above_p
    assert t[(3, 4, 2)] == 1 and tt[(3, 4, 2)] == 0
    assert all(tt[k] == (0 if k[0] > k[2] else t[k]) for k in t.entries)
    assert CartanBettiTable.from_json(t.to_json(), 3) == t


def test_proper_sequence_fixture():
    j = ExtIdeal.from_monomials(4, [(1, 2), (3, 4)], Q)
    res = is_proper_sequence(j)
    assert not res and res.witness == (1, 1, 3, 1)
    assert connecting_map_rank(j, 1, 1, 3) == 1
    assert is_proper_sequence(ExtIdeal.from_monomials(3, [(1, 2)], Q)).proper


@given(graded_ideals(n_max=4), st.integers(0, 10**6))
def test_connecting_routes_agree(j, seed):
    g = random_invertible(j.n, random.Random(seed), Q)
    mod = QuotientModule(substitute(g, j))
    table = CartanBettiTable(j.n, 3, betti_of_module(mod, 3, range(1, j.n + 1)))
    for p in range(1, j.n):
        for jdeg in range(j.n + 3):
            ranks = connecting_ranks_from_table(table, p, jdeg, 2)
            for i in (1, 2):
                assert ranks[i] == _connecting_rank_explicit(mod, p, i, jdeg)


def test_matrix_type_is_sparse():
    m = boundary_matrix(ExtIdeal.zero(2, Q), 2, 1, 1)
    assert isinstance(m, Matrix) and m.nrows == 2 and m.ncols == 2
