import random

import pytest
from hypothesis import given

from cartanshift.exterior import ExtIdeal, lex
from cartanshift.generators import random_stable_ideal
from cartanshift.shifting import (DELTA_E, DELTA_LEX, DELTA_S, ShiftOperator, adeg, adeg_i,
                                  betti_from_facets, deg, degree_report, init_segment, is_cm,
                                  is_componentwise_linear, is_gotzmann, is_sequentially_cm,
                                  is_sequentially_cm_duval, iterated_betti, padded_leq, sdeg,
                                  verify_axioms)
from cartanshift.simplicial import (SimplicialComplex, complex_of_ideal, f_vector, h_triangle,
                                    is_cm_reisner, is_pure, is_shifted)
from strategies import seeded_complexes

Q = 2**31 - 1
SHIFTED_DE = SimplicialComplex(4, [(1,), (2, 4), (3, 4)])


def test_operator_parsing():
    assert ShiftOperator.parse("e") == DELTA_E
    assert ShiftOperator.parse("tau-lex") == DELTA_LEX
    assert ShiftOperator.parse("s") == DELTA_S
    assert [op.name for op in (DELTA_E, DELTA_LEX, DELTA_S)] == ["e", "tau-lex", "s"]
    with pytest.raises(ValueError):
        ShiftOperator.parse("x")


def test_shift_fixtures(hollow_triangle, disjoint_edges):
    for op in (DELTA_E, DELTA_LEX, DELTA_S):
        assert op(disjoint_edges) == SHIFTED_DE
        assert op(hollow_triangle) == hollow_triangle


def test_degree_fixtures(hollow_triangle, disjoint_edges):
    assert degree_report(disjoint_edges).to_json() == {"deg": 2, "adeg_i": [0, 0, 2], "adeg": 2, "sdeg": 3}
    assert degree_report(hollow_triangle).to_json() == {"deg": 3, "adeg_i": [0, 0, 3], "adeg": 3, "sdeg": 3}
    simplex = SimplicialComplex.simplex(3)
    assert (deg(simplex), adeg(simplex), sdeg(simplex)) == (1, 1, 1)
    assert adeg_i(SimplicialComplex.void(3)) == [] and deg(SimplicialComplex.void(3)) == 0
    assert padded_leq([1], [1, 0, 2]) and not padded_leq([0, 3], [1, 2])


def test_iterated_betti_fixtures(hollow_triangle, disjoint_edges):
    b = iterated_betti(hollow_triangle)
    assert [b[(2, r)] for r in range(3)] == [1, 1, 1] and sum(b.values()) == 3
    b = iterated_betti(disjoint_edges)
    assert {k: v for k, v in b.items() if v} == {(1, 1): 1, (2, 0): 1, (2, 1): 1}
    assert h_triangle(disjoint_edges)[(2, 2)] == -1
    assert iterated_betti(disjoint_edges, DELTA_S) == b
    assert init_segment((2, 4), 4) == (4,) and init_segment((1, 2), 4) == ()


def test_predicates(hollow_triangle, disjoint_edges):
    assert is_cm(hollow_triangle) and not is_cm(disjoint_edges)
    assert is_sequentially_cm(hollow_triangle) and not is_sequentially_cm(disjoint_edges)
    assert is_sequentially_cm(SHIFTED_DE) and not is_cm(SHIFTED_DE)


def test_componentwise_linear_and_gotzmann():
    j = ExtIdeal.from_monomials(4, [(1, 2), (3, 4)], Q)
    assert not is_componentwise_linear(j, deep=True)
    assert not is_gotzmann(j)
    j = ExtIdeal.from_monomials(3, [(1, 3)], Q)
    assert is_componentwise_linear(j, deep=True)
    assert is_gotzmann(lex(ExtIdeal.from_monomials(4, [(2, 4)], Q)))


@given(seeded_complexes(n_max=5))
def test_shifting_properties(c):
    se, sl, ss = DELTA_E(c), DELTA_LEX(c), DELTA_S(c)
    for s in (se, sl, ss):
        assert is_shifted(s) and f_vector(s) == f_vector(c)
        assert padded_leq(adeg_i(c), adeg_i(s))
        assert is_sequentially_cm_duval(s, Q)
        assert is_pure(s) == is_cm_reisner(s, Q)
    assert padded_leq(adeg_i(se), adeg_i(sl))
    assert DELTA_E(se) == se and DELTA_S(ss) == ss


@given(seeded_complexes(n_max=5))
def test_iterated_betti_properties(c):
    b = iterated_betti(c)
    seq = is_sequentially_cm(c)
    h = h_triangle(c)
    assert seq == all(b.get(k, 0) == h.get(k, 0) for k in set(b) | set(h))
    assert sum(b.values()) == adeg(DELTA_E(c))
    assert betti_from_facets(DELTA_E(c)) == b


def test_shifted_complexes_are_fixed():
    rng = random.Random(5)
    for _ in range(10):
        c = complex_of_ideal(random_stable_ideal(5, rng, Q))
        assert is_shifted(c)
        for op in (DELTA_E, DELTA_LEX, DELTA_S):
            assert op(c) == c


def test_axiom_report(hollow_triangle, disjoint_edges):
    rep = verify_axioms(DELTA_E, [hollow_triangle, disjoint_edges, SimplicialComplex.void(3)])
    assert rep.passed and rep.samples == 3
    assert rep.to_json()["violations"] == {"S1": [], "S2": [], "S3": [], "S4": []}
