import random

import pytest
from hypothesis import settings

from cartanshift.simplicial import SimplicialComplex

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

Q = 2**31 - 1
SMALL_Q = 101


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def hollow_triangle():
    return SimplicialComplex(3, [(1, 2), (1, 3), (2, 3)])


@pytest.fixture
def disjoint_edges():
    return SimplicialComplex(4, [(1, 2), (3, 4)])
