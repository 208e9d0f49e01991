from itertools import combinations, permutations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cartanshift.errors import CompositionNotZero, DimensionMismatch
from cartanshift.linalg import (Echelon, Matrix, apply, dense_pivots, homology_dim, inverse,
                                is_prime, kernel_basis, matmul_mod, rank, rref)
from strategies import matrices

Q = 101


def det_mod(rows, q):
    """Leibniz determinant, an oracle independent of elimination."""
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for a, b in combinations(range(n), 2) if perm[a] > perm[b])
        prod = 1
        for r in range(n):
            prod *= rows[r][perm[r]]
        total += -prod if inv % 2 else prod
    return total % q


def rank_by_minors(rows, q):
    nr, nc = len(rows), len(rows[0])
    for k in range(min(nr, nc), 0, -1):
        for rs in combinations(range(nr), k):
            for cs in combinations(range(nc), k):
                if det_mod([[rows[r][c] for c in cs] for r in rs], q):
                    return k
    return 0


def test_is_prime():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(2**31 - 1) and is_prime(1000000007)
    assert not is_prime(2**31 - 3)


def test_inverse():
    assert all(a * inverse(a, Q) % Q == 1 for a in range(1, Q))
    with pytest.raises(ZeroDivisionError):
        inverse(0, Q)


def test_rank_fixtures():
    assert rank(Matrix.from_dense([[1, 2], [2, 4]], Q)) == 1
    assert rank(Matrix.from_dense([[1, 2], [3, 4]], Q)) == 2
    assert rank(Matrix.from_dense([[1, 2], [3, 4]], 2)) == 1
    assert rank(Matrix.zeros(3, 4, Q)) == 0
    assert rank(Matrix.identity(5, Q)) == 5


@given(matrices(Q, 4, 4))
def test_rank_matches_minor_oracle(rows):
    assert rank(Matrix.from_dense(rows, Q)) == rank_by_minors(rows, Q)


@given(matrices(Q))
def test_rank_nullity_and_kernel(rows):
    m = Matrix.from_dense(rows, Q)
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.ncols
    assert all(not apply(m, v) for v in ker)
    assert Echelon(Q, ker).rank == len(ker)


@given(matrices(Q))
def test_rank_of_transpose(rows):
    m = Matrix.from_dense(rows, Q)
    assert rank(m) == rank(m.transpose())


@given(matrices(Q))
def test_rref_is_reduced(rows):
    r = rref(Matrix.from_dense(rows, Q))
    dense = r.basis.to_dense()
    for k, p in enumerate(r.pivots):
        assert [row[p] for row in dense] == [1 if t == k else 0 for t in range(r.rank)]
        assert all(x == 0 for x in dense[k][:p])
    assert r.pivots == sorted(r.pivots)


@given(matrices(Q), st.data())
def test_echelon_membership(rows, data):
    ech = Echelon(Q, Matrix.from_dense(rows, Q).rows)
    coeffs = data.draw(st.lists(st.integers(0, Q - 1), min_size=len(rows), max_size=len(rows)))
    combo = {}
    for c, row in zip(coeffs, rows):
        for k, x in enumerate(row):
            combo[k] = (combo.get(k, 0) + c * x) % Q
    assert ech.contains({k: x for k, x in combo.items() if x})


@given(matrices(Q, 6, 6))
def test_dense_pivots_match_rank(rows):
    assert len(dense_pivots(np.array(rows), Q)) == rank(Matrix.from_dense(rows, Q))


def test_dense_pivots_rejects_large_prime():
    with pytest.raises(ValueError):
        dense_pivots(np.array([[1]]), 2**61 - 1)


@given(matrices(2**31 - 1, 4, 30), matrices(2**31 - 1, 30, 4))
def test_matmul_mod_matches_python_integers(a, b):
    q = 2**31 - 1
    inner = min(len(a[0]), len(b))
    a = [row[:inner] for row in a]
    b = b[:inner]
    expected = [[sum(a[i][k] * b[k][j] for k in range(inner)) % q for j in range(len(b[0]))]
                for i in range(len(a))]
    assert matmul_mod(np.array(a), np.array(b), q).tolist() == expected


def test_homology_dim_and_errors():
    d1 = Matrix.from_dense([[1, 1]], Q)            # C_1 = F^2 -> C_0 = F
    d2 = Matrix.from_dense([[1], [Q - 1]], Q)      # C_2 = F -> C_1
    assert homology_dim(d2, d1) == 0
    with pytest.raises(CompositionNotZero):
        homology_dim(Matrix.from_dense([[1], [1]], Q), d1)
    with pytest.raises(DimensionMismatch):
        homology_dim(Matrix.from_dense([[1]], Q), d1)


def test_matmul_and_identity():
    a = Matrix.from_dense([[1, 2], [3, 4]], Q)
    assert a @ Matrix.identity(2, Q) == a
    assert (a @ a).to_dense() == [[7, 10], [15, 22]]
    with pytest.raises(DimensionMismatch):
        a @ Matrix.identity(3, Q)
