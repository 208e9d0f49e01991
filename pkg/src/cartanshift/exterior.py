"""Exterior algebra E = K<e_1, ..., e_n>: monomials, term orders, graded ideals.

A monomial e_F is the sorted tuple of the indices in F (1-based).  The
monomial basis of E_d is ``basis(n, d)``, i.e. ``itertools.combinations``
order, which is the deglex order from largest to smallest.  Generic
(non-monomial) components are stored as echelon bases over that basis.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cmp_to_key, lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import NotMonomial, NotRealizable, SingularMatrix
from .linalg import DEFAULT_PRIME, Echelon, Matrix, Vector, rank

Monomial = tuple

DEGREVLEX = "degrevlex"
DEGLEX = "deglex"
ORDERS = (DEGREVLEX, DEGLEX)


@lru_cache(maxsize=None)
def basis(n: int, d: int) -> tuple[Monomial, ...]:
    if d < 0 or d > n:
        return ()
    return tuple(combinations(range(1, n + 1), d))


@lru_cache(maxsize=None)
def basis_index(n: int, d: int) -> dict[Monomial, int]:
    return {m: k for k, m in enumerate(basis(n, d))}


def monomial(support: Iterable[int]) -> Monomial:
    m = tuple(sorted(support))
    if len(set(m)) != len(m):
        raise ValueError(f"repeated index in {m}")
    return m


def wedge(a: Monomial, b: Monomial) -> tuple[int, Monomial | None]:
    """e_a ^ e_b as ``(sign, support)``; ``(0, None)`` when supports meet."""
    sa = set(a)
    if sa.intersection(b):
        return 0, None
    inversions = sum(1 for x in a for y in b if x > y)
    return (-1 if inversions % 2 else 1), tuple(sorted(sa.union(b)))


def right_mult_sign(m: Monomial, k: int) -> int:
    """Sign of e_m ^ e_k relative to e_{m u k} (k not in m)."""
    return -1 if sum(1 for x in m if x > k) % 2 else 1


def compare(order: str, a: Monomial, b: Monomial) -> int:
    """Three-way comparison: 1 if a > b, -1 if a < b, 0 if equal."""
    if len(a) != len(b):
        return 1 if len(a) > len(b) else -1
    if a == b:
        return 0
    diff = set(a).symmetric_difference(b)
    if order == DEGREVLEX:
        return -1 if max(diff) in a else 1
    if order == DEGLEX:
        return 1 if min(diff) in a else -1
    raise ValueError(f"unknown exterior term order {order!r}")


@lru_cache(maxsize=None)
def ordered_basis(n: int, d: int, order: str) -> tuple[Monomial, ...]:
    """Monomials of E_d sorted from largest to smallest."""
    return tuple(sorted(basis(n, d), key=cmp_to_key(lambda a, b: compare(order, b, a))))


def _multiply_space(n: int, d: int, vectors: Iterable[Vector], q: int) -> list[Vector]:
    """Spanning set of E_1 * V for V inside E_d (right multiplication)."""
    src = basis(n, d)
    idx = basis_index(n, d + 1)
    out = []
    for v in vectors:
        for k in range(1, n + 1):
            w: Vector = {}
            for c, x in v.items():
                m = src[c]
                if k in m:
                    continue
                s = right_mult_sign(m, k)
                t = idx[tuple(sorted(m + (k,)))]
                w[t] = (w.get(t, 0) + s * x) % q
            w = {t: x for t, x in w.items() if x}
            if w:
                out.append(w)
    return out


@dataclass(frozen=True)
class Subspace:
    """A subspace of E_d given by a fully reduced echelon basis."""

    dim_ambient: int
    pivots: tuple[int, ...]
    rows: tuple[tuple[tuple[int, int], ...], ...]

    @classmethod
    def span(cls, dim_ambient: int, vectors: Iterable[Vector], q: int) -> "Subspace":
        reduced = Echelon(q, vectors).reduced_rows()
        return cls(dim_ambient, tuple(c for c, _ in reduced),
                   tuple(tuple(sorted(r.items())) for _, r in reduced))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def vectors(self) -> list[Vector]:
        return [dict(r) for r in self.rows]


class ExtIdeal:
    """Graded ideal of E, stored degree by degree for d = 0..n.

    Each component is either a ``frozenset`` of monomials (monomial
    component) or a :class:`Subspace` over ``basis(n, d)``.
    """

    __slots__ = ("n", "q", "components")

    def __init__(self, n: int, components: Sequence, q: int = DEFAULT_PRIME):
        if len(components) != n + 1:
            raise ValueError(f"need components for degrees 0..{n}")
        self.n = n
        self.q = q
        comps = []
        for d, c in enumerate(components):
            if isinstance(c, Subspace):
                comps.append(c)
            else:
                c = frozenset(monomial(m) for m in c)
                if any(len(m) != d for m in c):
                    raise ValueError(f"monomial of wrong degree in component {d}")
                comps.append(c)
        self.components = tuple(comps)

    # construction -------------------------------------------------------

    @classmethod
    def zero(cls, n: int, q: int = DEFAULT_PRIME) -> "ExtIdeal":
        return cls(n, [frozenset()] * (n + 1), q)

    @classmethod
    def from_monomials(cls, n: int, gens: Iterable[Iterable[int]],
                       q: int = DEFAULT_PRIME) -> "ExtIdeal":
        gens = [frozenset(g) for g in gens]
        for g in gens:
            if not g <= set(range(1, n + 1)):
                raise ValueError(f"generator {sorted(g)} not supported on [{n}]")
        comps = []
        for d in range(n + 1):
            comps.append(frozenset(m for m in basis(n, d) if any(g <= set(m) for g in gens)))
        return cls(n, comps, q)

    @classmethod
    def from_polynomials(cls, n: int, polys: Iterable[dict], q: int = DEFAULT_PRIME) -> "ExtIdeal":
        """Ideal generated by homogeneous forms ``{monomial: coefficient}``."""
        by_degree: dict[int, list[Vector]] = {}
        for f in polys:
            f = {monomial(m): c % q for m, c in f.items() if c % q}
            if not f:
                continue
            degs = {len(m) for m in f}
            if len(degs) != 1:
                raise ValueError("generators must be homogeneous")
            d = degs.pop()
            idx = basis_index(n, d)
            by_degree.setdefault(d, []).append({idx[m]: c for m, c in f.items()})
        comps: list = []
        prev: list[Vector] = []
        for d in range(n + 1):
            vecs = _multiply_space(n, d - 1, prev, q) if d > 0 else []
            vecs += by_degree.get(d, [])
            sub = Subspace.span(len(basis(n, d)), vecs, q)
            comps.append(sub)
            prev = sub.vectors()
        return cls(n, comps, q).simplified()

    @classmethod
    def from_components(cls, n: int, spaces: Sequence[Iterable[Vector]],
                        q: int = DEFAULT_PRIME) -> "ExtIdeal":
        comps = [Subspace.span(len(basis(n, d)), spaces[d], q) for d in range(n + 1)]
        return cls(n, comps, q).simplified()

    def simplified(self) -> "ExtIdeal":
        """Replace subspaces spanned by monomials with monomial components."""
        comps = []
        for d, c in enumerate(self.components):
            if isinstance(c, Subspace) and all(len(r) == 1 for r in c.rows):
                b = basis(self.n, d)
                comps.append(frozenset(b[p] for p in c.pivots))
            else:
                comps.append(c)
        return ExtIdeal(self.n, comps, self.q)

    # queries ------------------------------------------------------------

    @property
    def is_monomial(self) -> bool:
        return all(isinstance(c, frozenset) for c in self.components)

    def hilbert(self) -> list[int]:
        return [len(c) if isinstance(c, frozenset) else c.dim for c in self.components]

    def quotient_hilbert(self) -> list[int]:
        return [comb(self.n, d) - h for d, h in enumerate(self.hilbert())]

    def monomials(self, d: int) -> frozenset:
        c = self.components[d]
        if not isinstance(c, frozenset):
            raise NotMonomial(f"component {d} is not spanned by monomials")
        return c

    def vectors(self, d: int) -> list[Vector]:
        """Spanning vectors of component d over ``basis(n, d)``."""
        if d < 0 or d > self.n:
            return []
        c = self.components[d]
        if isinstance(c, frozenset):
            idx = basis_index(self.n, d)
            return [{idx[m]: 1} for m in sorted(c)]
        return c.vectors()

    def echelon(self, d: int) -> Echelon:
        return Echelon(self.q, self.vectors(d))

    def key(self) -> tuple:
        out = []
        for c in self.components:
            out.append(tuple(sorted(c)) if isinstance(c, frozenset) else (c.pivots, c.rows))
        return (self.n, tuple(out))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtIdeal):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        if self.is_monomial:
            gens = sorted(minimal_generators(self), key=lambda m: (len(m), m))
            return f"ExtIdeal(n={self.n}, gens={[list(g) for g in gens]})"
        return f"ExtIdeal(n={self.n}, hilbert={self.hilbert()}, generic)"


def minimal_generators(j: ExtIdeal) -> set[Monomial]:
    """G(J): monomials of J none of whose proper divisors lie in J."""
    out = set()
    for d in range(j.n + 1):
        below = j.monomials(d - 1) if d > 0 else frozenset()
        for m in j.monomials(d):
            if not any(m[:t] + m[t + 1:] in below for t in range(len(m))):
                out.add(m)
    return out


def generated_degrees(j: ExtIdeal) -> list[int]:
    """dim (J / E_1 J)_d for d = 0..n, by linear algebra (any ideal)."""
    out = []
    for d in range(j.n + 1):
        if d == 0:
            out.append(j.hilbert()[0])
            continue
        prod = _multiply_space(j.n, d - 1, j.vectors(d - 1), j.q)
        out.append(j.hilbert()[d] - Echelon(j.q, prod).rank)
    return out


@dataclass(frozen=True)
class MStatistics:
    """Counts of monomials by largest index (and degree)."""

    m_i: dict
    m_le_i: dict
    m_ij: dict

    def le(self, i: int) -> int:
        return self.m_le_i.get(i, 0) if i >= 0 else 0


def m_stats(g: Iterable[Monomial], n: int | None = None) -> MStatistics:
    g = [tuple(m) for m in g]
    if n is None:
        n = max((max(m) for m in g if m), default=0)
    m_i = {i: 0 for i in range(n + 1)}
    m_ij: dict = {}
    for m in g:
        top = max(m) if m else 0
        m_i[top] = m_i.get(top, 0) + 1
        m_ij[(top, len(m))] = m_ij.get((top, len(m)), 0) + 1
    m_le_i = {}
    running = 0
    for i in sorted(m_i):
        running += m_i[i]
        m_le_i[i] = running
    return MStatistics(m_i, m_le_i, m_ij)


def is_squarefree_strongly_stable(j: ExtIdeal) -> bool:
    for d in range(j.n + 1):
        comp = j.monomials(d)
        for m in comp:
            sm = set(m)
            for i in m:
                for k in range(1, i):
                    if k not in sm and tuple(sorted((sm - {i}) | {k})) not in comp:
                        return False
    return True


def lexsegment_ideal(hilbert: Sequence[int], n: int, q: int = DEFAULT_PRIME) -> ExtIdeal:
    """The squarefree lexsegment ideal with the given per-degree dimensions."""
    h = list(hilbert) + [0] * (n + 1 - len(hilbert))
    if len(h) > n + 1 and any(h[n + 1:]):
        raise NotRealizable("nonzero dimension above degree n")
    comps = []
    for d in range(n + 1):
        if h[d] < 0 or h[d] > comb(n, d):
            raise NotRealizable(f"dimension {h[d]} impossible in degree {d}")
        comps.append(frozenset(ordered_basis(n, d, DEGLEX)[:h[d]]))
    for d in range(n):
        for m in comps[d]:
            for k in range(1, n + 1):
                if k not in m and tuple(sorted(m + (k,))) not in comps[d + 1]:
                    raise NotRealizable(f"segment in degree {d} does not multiply into degree {d + 1}")
    return ExtIdeal(n, comps, q)


def lex(j: ExtIdeal) -> ExtIdeal:
    return lexsegment_ideal(j.hilbert(), j.n, j.q)


def _as_rows(g, q: int) -> list[list[int]]:
    if isinstance(g, Matrix):
        return g.to_dense()
    return [[int(x) % q for x in row] for row in g]


def exterior_power_images(g, n: int, d: int, monomials: Iterable[Monomial], q: int) -> dict:
    """Images of e_F under e_i -> sum_k g[k][i] e_k, as sparse vectors over basis(n, d)."""
    rows = _as_rows(g, q)
    cols = [{k + 1: rows[k][i] for k in range(n) if rows[k][i]} for i in range(n)]
    cache: dict[Monomial, dict] = {(): {(): 1}}

    def image(f: Monomial) -> dict:
        if f in cache:
            return cache[f]
        prev = image(f[:-1])
        out: dict = {}
        for m, a in prev.items():
            sm = set(m)
            for k, b in cols[f[-1] - 1].items():
                if k in sm:
                    continue
                t = tuple(sorted(m + (k,)))
                out[t] = (out.get(t, 0) + right_mult_sign(m, k) * a * b) % q
        out = {t: x for t, x in out.items() if x}
        cache[f] = out
        return out

    idx = basis_index(n, d)
    return {f: {idx[t]: x for t, x in image(f).items()} for f in monomials}


def substitute(g, j: ExtIdeal) -> ExtIdeal:
    """Image of J under the algebra automorphism induced by the invertible g."""
    n, q = j.n, j.q
    rows = _as_rows(g, q)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise SingularMatrix(f"expected an {n}x{n} matrix")
    if rank(Matrix.from_dense(rows, q)) < n:
        raise SingularMatrix("change of coordinates is not invertible")
    comps = []
    for d in range(n + 1):
        vecs = j.vectors(d)
        if not vecs:
            comps.append(frozenset())
            continue
        b = basis(n, d)
        support = sorted({b[c] for v in vecs for c in v})
        images = exterior_power_images(rows, n, d, support, q)
        out = []
        for v in vecs:
            w: Vector = {}
            for c, x in v.items():
                for t, y in images[b[c]].items():
                    w[t] = (w.get(t, 0) + x * y) % q
            out.append({t: x for t, x in w.items() if x})
        comps.append(Subspace.span(len(b), out, q))
    return ExtIdeal(n, comps, q).simplified()


def component_ideal(j: ExtIdeal, t: int) -> ExtIdeal:
    """J_<t>: the ideal generated by the degree-t component of J."""
    n, q = j.n, j.q
    if t < 0 or t > n:
        return ExtIdeal.zero(n, q)
    if j.is_monomial:
        comps = [frozenset()] * t + [j.monomials(t)]
        for d in range(t + 1, n + 1):
            prev = comps[-1]
            comps.append(frozenset(tuple(sorted(m + (k,))) for m in prev
                                   for k in range(1, n + 1) if k not in m))
        return ExtIdeal(n, comps, q)
    spaces: list[list[Vector]] = [[] for _ in range(n + 1)]
    spaces[t] = j.vectors(t)
    for d in range(t + 1, n + 1):
        spaces[d] = Subspace.span(len(basis(n, d)), _multiply_space(n, d - 1, spaces[d - 1], q), q).vectors()
    return ExtIdeal.from_components(n, spaces, q)


def multiply_by_linear_dims(j: ExtIdeal) -> list[int]:
    """dim E_1 * J_d (a subspace of E_{d+1}) for d = 0..n."""
    return [Echelon(j.q, _multiply_space(j.n, d, j.vectors(d), j.q)).rank if d < j.n else 0
            for d in range(j.n + 1)]


def random_invertible(n: int, rng: random.Random, q: int = DEFAULT_PRIME) -> list[list[int]]:
    """Uniform entries in F_q, rejection-sampled until invertible."""
    while True:
        g = [[rng.randrange(q) for _ in range(n)] for _ in range(n)]
        if rank(Matrix.from_dense(g, q)) == n:
            return g
