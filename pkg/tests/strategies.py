"""Hypothesis strategies shared by the test modules."""

import random

from hypothesis import strategies as st

from cartanshift.generators import random_complex, random_graded_ideal, random_stable_ideal
from cartanshift.simplicial import SimplicialComplex


@st.composite
def complexes(draw, n_min=1, n_max=5):
    n = draw(st.integers(n_min, n_max))
    faces = draw(st.lists(st.frozensets(st.integers(1, n), max_size=n), max_size=6))
    return SimplicialComplex(n, faces)


@st.composite
def seeded_complexes(draw, n_min=2, n_max=5):
    n = draw(st.integers(n_min, n_max))
    seed = draw(st.integers(0, 10**6))
    density = draw(st.sampled_from([0.0, 0.1, 0.2, 0.4]))
    return random_complex(n, density, random.Random(seed))


@st.composite
def stable_ideals(draw, n_min=1, n_max=5, q=2**31 - 1):
    n = draw(st.integers(n_min, n_max))
    return random_stable_ideal(n, random.Random(draw(st.integers(0, 10**6))), q)


@st.composite
def graded_ideals(draw, n_min=2, n_max=4, q=2**31 - 1):
    n = draw(st.integers(n_min, n_max))
    return random_graded_ideal(n, random.Random(draw(st.integers(0, 10**6))), q)


def matrices(q, max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(lambda r: st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(st.integers(0, q - 1), min_size=c, max_size=c),
                           min_size=r, max_size=r)))
