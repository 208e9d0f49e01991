from itertools import combinations

import pytest
from hypothesis import given

from cartanshift.errors import NotSquarefree
from cartanshift.exterior import minimal_generators
from cartanshift.simplicial import (SimplicialComplex, alexander_dual, complex_of_ideal, f_from_h,
                                    f_triangle, f_vector, facets_by_size, h_from_f, h_triangle,
                                    is_cm_reisner, is_pure, is_shifted, link, minimal_nonfaces,
                                    reduced_homology_dims, skeleton_pure, socle_dims,
                                    sr_ideal_exterior, sr_ideal_symmetric)
from cartanshift.symmetric import SymIdeal
from strategies import complexes, seeded_complexes

Q = 2**31 - 1


def dual_by_definition(c):
    ground = set(range(1, c.n + 1))
    faces = [f for k in range(c.n + 1) for f in combinations(range(1, c.n + 1), k)
             if tuple(sorted(ground - set(f))) not in c.faces]
    return SimplicialComplex(c.n, faces)


def octahedron():
    return SimplicialComplex(6, [(a, b, c) for a in (1, 2) for b in (3, 4) for c in (5, 6)])


def test_void_and_empty_conventions():
    void, empty = SimplicialComplex.void(3), SimplicialComplex(3, [()])
    assert void.is_void and void.dim == -2
    assert f_vector(void) == [] and f_vector(empty) == [1]
    assert empty.dim == -1 and not empty.is_void
    assert alexander_dual(SimplicialComplex.simplex(3)) == void
    assert alexander_dual(void) == SimplicialComplex.simplex(3)
    assert is_cm_reisner(void) and is_cm_reisner(empty)
    assert reduced_homology_dims(empty) == [1]


def test_fixtures(hollow_triangle, disjoint_edges):
    assert f_vector(hollow_triangle) == [1, 3, 3]
    assert reduced_homology_dims(hollow_triangle) == [0, 0, 1]
    assert reduced_homology_dims(disjoint_edges) == [0, 1, 0]
    assert reduced_homology_dims(octahedron()) == [0, 0, 0, 1]
    assert minimal_nonfaces(disjoint_edges) == [(1, 3), (1, 4), (2, 3), (2, 4)]
    assert alexander_dual(disjoint_edges) == SimplicialComplex(4, [(1, 3), (1, 4), (2, 3), (2, 4)])
    assert is_cm_reisner(hollow_triangle) and is_cm_reisner(octahedron())
    assert not is_cm_reisner(disjoint_edges)
    bowtie = SimplicialComplex(5, [(1, 2, 3), (1, 4, 5)])
    assert not is_cm_reisner(bowtie)
    assert is_cm_reisner(SimplicialComplex(4, [(1, 2), (2, 3), (3, 4), (1, 4)]))
    assert is_shifted(SimplicialComplex(4, [(1,), (2, 4), (3, 4)]))
    assert not is_shifted(disjoint_edges)


def test_sr_ideals(disjoint_edges):
    j = sr_ideal_exterior(disjoint_edges, Q)
    assert minimal_generators(j) == {(1, 3), (1, 4), (2, 3), (2, 4)}
    i = sr_ideal_symmetric(disjoint_edges, Q)
    assert sorted(i.minimal_generators()) == sorted(
        [(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)])
    with pytest.raises(NotSquarefree):
        complex_of_ideal(SymIdeal.from_monomials(2, [(2, 0)], 2, Q))


@given(complexes())
def test_alexander_dual_matches_definition_and_is_involution(c):
    d = alexander_dual(c)
    assert d == dual_by_definition(c)
    assert alexander_dual(d) == c


@given(complexes())
def test_sr_ideal_round_trips(c):
    assert complex_of_ideal(sr_ideal_exterior(c, Q)) == c
    assert complex_of_ideal(sr_ideal_symmetric(c, Q)) == c


@given(complexes())
def test_euler_characteristic(c):
    if c.is_void:
        return
    fv = f_vector(c)
    h = reduced_homology_dims(c)
    assert sum((-1) ** k * x for k, x in enumerate(h)) == sum((-1) ** k * x for k, x in enumerate(fv))


@given(complexes())
def test_h_f_round_trip(c):
    f = f_triangle(c)
    assert f_from_h(h_from_f(f)) == f
    assert h_triangle(c) == h_from_f(f)


@given(complexes())
def test_f_triangle_sums_to_f_vector(c):
    f = f_triangle(c)
    fv = f_vector(c)
    for r in range(len(fv)):
        assert sum(v for (i, s), v in f.items() if s == r) == fv[r]


@given(seeded_complexes())
def test_socle_equals_facet_counts(c):
    assert socle_dims(c, Q) == facets_by_size(c)


@given(complexes())
def test_cm_implies_pure_and_links(c):
    if is_cm_reisner(c, Q):
        assert is_pure(c)
        for f in c.facets[:2]:
            assert is_cm_reisner(link(c, f[:1]), Q)


@given(complexes())
def test_pure_skeleta_are_pure(c):
    for i in range(-1, c.dim + 1):
        assert is_pure(skeleton_pure(c, i))


def test_json_round_trip(disjoint_edges):
    assert SimplicialComplex.from_json(disjoint_edges.to_json()) == disjoint_edges
    with pytest.raises(ValueError):
        SimplicialComplex(2, [(1, 3)])
