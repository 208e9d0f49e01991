"""Polynomial ring S = K[x_1, ..., x_n], only as much as symmetric shifting needs.

Monomials are exponent tuples of length n.  ``sym_basis(n, d)`` lists the
monomials of S_d from largest to smallest in degrevlex, so pivot columns of
an echelon form are initial monomials.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

import numpy as np

from .errors import AmbientTooSmall, NotMonomial, SingularMatrix
from .linalg import DEFAULT_PRIME, Matrix, matmul_mod, rank

SymMonomial = tuple


def degree(m: SymMonomial) -> int:
    return sum(m)


def sym_compare_degrevlex(a: SymMonomial, b: SymMonomial) -> int:
    if len(a) != len(b):
        raise ValueError("monomials live in different rings")
    if sum(a) != sum(b):
        return 1 if sum(a) > sum(b) else -1
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return 1 if x < y else -1
    return 0


@lru_cache(maxsize=None)
def sym_basis(n: int, d: int) -> tuple[SymMonomial, ...]:
    if d < 0:
        return ()
    out = []
    for idx in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in idx:
            e[i] += 1
        out.append(tuple(e))
    # ascending reversed exponent vector == descending degrevlex
    out.sort(key=lambda e: tuple(reversed(e)))
    return tuple(out)


@lru_cache(maxsize=None)
def sym_index(n: int, d: int) -> dict[SymMonomial, int]:
    return {m: k for k, m in enumerate(sym_basis(n, d))}


def divides(a: SymMonomial, b: SymMonomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def indices(m: SymMonomial) -> list[int]:
    """1-based variable indices of m with multiplicity, nondecreasing."""
    return [i + 1 for i, e in enumerate(m) for _ in range(e)]


def sigma_stretch(m: SymMonomial) -> SymMonomial:
    """x_{i1} x_{i2} ... x_{it} -> x_{i1} x_{i2+1} ... x_{it+t-1}."""
    idx = indices(m)
    stretched = [i + t for t, i in enumerate(idx)]
    size = max([len(m)] + stretched)
    out = [0] * size
    for i in stretched:
        out[i - 1] = 1
    return tuple(out)


def sigma_ideal(gens: Iterable[SymMonomial], n: int) -> list[tuple[int, ...]]:
    """Squarefree generators (as index sets) of the stretched ideal on [n]."""
    out = []
    for m in gens:
        s = sigma_stretch(m)
        support = tuple(i + 1 for i, e in enumerate(s) if e)
        if support and support[-1] > n:
            raise AmbientTooSmall(f"stretch of {m} needs {support[-1]} variables, have {n}")
        out.append(support)
    return sorted(set(out), key=lambda t: (len(t), t))


class SymIdeal:
    """Graded ideal of S, stored for degrees 0..d_max.

    Components are frozensets of monomials, or (for generic ideals) the list
    of pivot monomials is not enough, so a dense numpy row basis over
    ``sym_basis(n, d)`` is kept instead.
    """

    __slots__ = ("n", "d_max", "q", "components")

    def __init__(self, n: int, components: Sequence, q: int = DEFAULT_PRIME):
        self.n = n
        self.d_max = len(components) - 1
        self.q = q
        comps = []
        for c in components:
            comps.append(c if isinstance(c, np.ndarray) else frozenset(tuple(m) for m in c))
        self.components = tuple(comps)

    @classmethod
    def from_monomials(cls, n: int, gens: Iterable[SymMonomial], d_max: int,
                       q: int = DEFAULT_PRIME) -> "SymIdeal":
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != n or min(g, default=0) < 0:
                raise ValueError(f"bad exponent vector {g} for n={n}")
        comps = [frozenset(m for m in sym_basis(n, d) if any(divides(g, m) for g in gens))
                 for d in range(d_max + 1)]
        return cls(n, comps, q)

    @property
    def is_monomial(self) -> bool:
        return all(isinstance(c, frozenset) for c in self.components)

    def hilbert(self) -> list[int]:
        return [len(c) if isinstance(c, frozenset) else c.shape[0] for c in self.components]

    def monomials(self, d: int) -> frozenset:
        c = self.components[d]
        if not isinstance(c, frozenset):
            raise NotMonomial(f"component {d} is not spanned by monomials")
        return c

    def minimal_generators(self) -> list[SymMonomial]:
        out = []
        for d in range(self.d_max + 1):
            below = self.monomials(d - 1) if d > 0 else frozenset()
            for m in sorted(self.monomials(d), key=lambda e: tuple(reversed(e))):
                if not any(m[i] and m[:i] + (m[i] - 1,) + m[i + 1:] in below for i in range(self.n)):
                    out.append(m)
        return out

    def key(self) -> tuple:
        out = []
        for c in self.components:
            out.append(tuple(sorted(c)) if isinstance(c, frozenset) else c.tobytes())
        return (self.n, tuple(out))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymIdeal):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        if self.is_monomial:
            return f"SymIdeal(n={self.n}, gens={[list(g) for g in self.minimal_generators()]})"
        return f"SymIdeal(n={self.n}, hilbert={self.hilbert()}, generic)"


def is_strongly_stable(i: SymIdeal) -> bool:
    """x_j m / x_i in I for all monomials m in I, x_i | m and j < i."""
    for d in range(i.d_max + 1):
        comp = i.monomials(d)
        for m in comp:
            for a in range(i.n):
                if not m[a]:
                    continue
                for b in range(a):
                    e = list(m)
                    e[a] -= 1
                    e[b] += 1
                    if tuple(e) not in comp:
                        return False
    return True


@lru_cache(maxsize=None)
def _shift_index(n: int, d: int) -> np.ndarray:
    """shift[k, c] = index in S_{d+1} of x_k times the c-th monomial of S_d."""
    src = sym_basis(n, d)
    idx = sym_index(n, d + 1)
    out = np.empty((n, len(src)), dtype=np.int64)
    for c, m in enumerate(src):
        for k in range(n):
            e = list(m)
            e[k] += 1
            out[k, c] = idx[tuple(e)]
    return out


def symmetric_power_matrices(g, n: int, d_max: int, q: int) -> list[np.ndarray]:
    """Row c of entry d is the image of the c-th monomial of S_d under x_i -> sum_k g[k][i] x_k."""
    if q >= 2**31:
        raise ValueError("dense symmetric powers need q < 2^31 to avoid int64 overflow")
    rows = g.to_dense() if isinstance(g, Matrix) else [[int(x) % q for x in r] for r in g]
    gm = np.array(rows, dtype=np.int64) % q
    mats = [np.ones((1, 1), dtype=np.int64)]
    for d in range(1, d_max + 1):
        src = sym_basis(n, d)
        prev_idx = sym_index(n, d - 1)
        shift = _shift_index(n, d - 1)
        out = np.zeros((len(src), len(src)), dtype=np.int64)
        # group monomials by their last variable; image(a) = image(a / x_l) * g(x_l)
        groups: dict[int, tuple[list[int], list[int]]] = {}
        for c, m in enumerate(src):
            last = max(i for i, e in enumerate(m) if e)
            parent = list(m)
            parent[last] -= 1
            groups.setdefault(last, ([], []))
            groups[last][0].append(c)
            groups[last][1].append(prev_idx[tuple(parent)])
        prev = mats[-1]
        for last, (targets, parents) in groups.items():
            p = prev[parents]
            acc = np.zeros((len(targets), len(src)), dtype=np.int64)
            for k in range(n):
                coef = int(gm[k, last])
                if coef:
                    np.add.at(acc, (slice(None), shift[k]), (p * coef) % q)
                    acc %= q
            out[targets] = acc
        mats.append(out)
    return mats


def sym_substitute(g, i: SymIdeal, d_max: int | None = None) -> SymIdeal:
    """Image of I under x_i -> sum_k g[k][i] x_k, components 0..d_max."""
    n, q = i.n, i.q
    if d_max is None:
        d_max = i.d_max
    rows = g.to_dense() if isinstance(g, Matrix) else [[int(x) % q for x in r] for r in g]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise SingularMatrix(f"expected an {n}x{n} matrix")
    if rank(Matrix.from_dense(rows, q)) < n:
        raise SingularMatrix("change of coordinates is not invertible")
    mats = symmetric_power_matrices(rows, n, d_max, q)
    comps = []
    for d in range(d_max + 1):
        c = i.components[d]
        if isinstance(c, frozenset):
            idx = sym_index(n, d)
            sel = sorted(idx[m] for m in c)
            comps.append(mats[d][sel] if sel else frozenset())
        else:
            comps.append(matmul_mod(c, mats[d], q) if c.shape[0] else frozenset())
    return SymIdeal(n, comps, q)
