"""Simplicial complexes on [n], Stanley-Reisner ideals and face-ring data.

Two degenerate complexes are kept apart: the *void* complex has no faces at
all (it is the Alexander dual of the full simplex), while the *empty*
complex {emptyset} has the single face emptyset.  The void complex has an
empty f-vector, dimension -2 and no facets.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable

from .errors import NotMonomial, NotSquarefree
from .exterior import ExtIdeal, basis, minimal_generators
from .linalg import DEFAULT_PRIME, Echelon, Vector, kernel_basis, Matrix
from .symmetric import SymIdeal

Face = tuple


class SimplicialComplex:
    """A simplicial complex on the vertex set [n], given by its facets."""

    def __init__(self, n: int, facets: Iterable[Iterable[int]]):
        cand = {tuple(sorted(set(f))) for f in facets}
        for f in cand:
            if f and (f[0] < 1 or f[-1] > n):
                raise ValueError(f"face {list(f)} is not a subset of [{n}]")
        maximal = [f for f in cand if not any(f != g and set(f) < set(g) for g in cand)]
        self.n = n
        self.facets: tuple[Face, ...] = tuple(sorted(maximal))

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, [])

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        return cls(n, [range(1, n + 1)])

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        return cls(n, faces)

    @property
    def is_void(self) -> bool:
        return not self.facets

    @cached_property
    def faces(self) -> frozenset:
        out = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                out.update(combinations(f, k))
        return frozenset(out)

    def faces_of_size(self, k: int) -> list[Face]:
        return sorted(f for f in self.faces if len(f) == k)

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=-1) - 1

    def __contains__(self, face) -> bool:
        return tuple(sorted(face)) in self.faces

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n == other.n and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.n, self.facets))

    def __le__(self, other: "SimplicialComplex") -> bool:
        return self.faces <= other.faces

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self.n}, facets={[list(f) for f in self.facets]})"

    def to_json(self) -> dict:
        return {"n": self.n, "facets": [list(f) for f in self.facets]}

    @classmethod
    def from_json(cls, data: dict) -> "SimplicialComplex":
        n = data["n"]
        if not isinstance(n, int) or n < 0:
            raise ValueError("'n' must be a non-negative integer")
        return cls(n, data["facets"])


def f_vector(c: SimplicialComplex) -> list[int]:
    """(f_{-1}, f_0, ..., f_dim); empty for the void complex."""
    if c.is_void:
        return []
    out = [0] * (c.dim + 2)
    for f in c.faces:
        out[len(f)] += 1
    return out


def facets_by_size(c: SimplicialComplex) -> list[int]:
    """Entry i counts facets with i vertices, i = 0..dim+1."""
    if c.is_void:
        return []
    out = [0] * (c.dim + 2)
    for f in c.facets:
        out[len(f)] += 1
    return out


def alexander_dual(c: SimplicialComplex) -> SimplicialComplex:
    """{F : [n] \\ F not in c}."""
    ground = set(range(1, c.n + 1))
    return SimplicialComplex(c.n, [tuple(sorted(ground - set(f))) for f in minimal_nonfaces(c)])


def minimal_nonfaces(c: SimplicialComplex) -> list[Face]:
    faces = c.faces
    out = []
    for k in range(c.n + 1):
        for f in combinations(range(1, c.n + 1), k):
            if f in faces:
                continue
            if all(f[:t] + f[t + 1:] in faces for t in range(k)):
                out.append(f)
    return out


def sr_ideal_exterior(c: SimplicialComplex, q: int = DEFAULT_PRIME) -> ExtIdeal:
    """J_c = (e_F : F not a face)."""
    faces = c.faces
    comps = [frozenset(m for m in basis(c.n, d) if m not in faces) for d in range(c.n + 1)]
    return ExtIdeal(c.n, comps, q)


def _indicator(f: Face, n: int) -> tuple[int, ...]:
    s = set(f)
    return tuple(1 if v in s else 0 for v in range(1, n + 1))


def sr_ideal_symmetric(c: SimplicialComplex, q: int = DEFAULT_PRIME) -> SymIdeal:
    """I_c = (x_F : F not a face), stored through degree n."""
    return SymIdeal.from_monomials(c.n, [_indicator(f, c.n) for f in minimal_nonfaces(c)], c.n, q)


def complex_of_ideal(ideal) -> SimplicialComplex:
    """The complex whose faces are the squarefree monomials outside a monomial ideal."""
    if isinstance(ideal, ExtIdeal):
        if not ideal.is_monomial:
            raise NotMonomial("complex_of_ideal needs a monomial ideal")
        n = ideal.n
        faces = [m for d in range(n + 1) for m in basis(n, d) if m not in ideal.monomials(d)]
        return SimplicialComplex(n, faces)
    if isinstance(ideal, SymIdeal):
        gens = ideal.minimal_generators()
        if any(e > 1 for g in gens for e in g):
            raise NotSquarefree("ideal has a non-squarefree minimal generator")
        supports = [frozenset(i + 1 for i, e in enumerate(g) if e) for g in gens]
        return complex_from_nonfaces(ideal.n, supports)
    raise TypeError(f"cannot read a complex from {type(ideal).__name__}")


def complex_from_nonfaces(n: int, nonfaces: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Complex of all subsets of [n] containing none of the given sets."""
    bad = [frozenset(s) for s in nonfaces]
    faces = [f for d in range(n + 1) for f in combinations(range(1, n + 1), d)
             if not any(b <= set(f) for b in bad)]
    return SimplicialComplex(n, faces)


def is_shifted(c: SimplicialComplex) -> bool:
    """F in c, i in F, j > i, j not in F  =>  (F \\ {i}) u {j} in c."""
    faces = c.faces
    for f in faces:
        sf = set(f)
        for i in f:
            for j in range(i + 1, c.n + 1):
                if j not in sf and tuple(sorted((sf - {i}) | {j})) not in faces:
                    return False
    return True


def face_degree(c: SimplicialComplex, f: Face) -> int:
    """Largest size of a face containing f."""
    sf = set(f)
    return max(len(g) for g in c.facets if sf <= set(g))


def f_triangle(c: SimplicialComplex) -> dict[tuple[int, int], int]:
    """f_{i,r}: faces of degree i and size r, for 0 <= r <= i <= dim + 1."""
    if c.is_void:
        return {}
    d = c.dim + 1
    out = {(i, r): 0 for i in range(d + 1) for r in range(i + 1)}
    for f in c.faces:
        out[(face_degree(c, f), len(f))] += 1
    return out


def h_from_f(f: dict[tuple[int, int], int]) -> dict[tuple[int, int], int]:
    """h_{i,r} = sum_s (-1)^{r-s} C(i-s, r-s) f_{i,s}."""
    return {(i, r): sum((-1) ** (r - s) * comb(i - s, r - s) * f.get((i, s), 0)
                        for s in range(r + 1))
            for (i, r) in f}


def f_from_h(h: dict[tuple[int, int], int]) -> dict[tuple[int, int], int]:
    """Inverse of :func:`h_from_f`: f_{i,r} = sum_s C(i-s, r-s) h_{i,s}."""
    return {(i, r): sum(comb(i - s, r - s) * h.get((i, s), 0) for s in range(r + 1))
            for (i, r) in h}


def h_triangle(c: SimplicialComplex) -> dict[tuple[int, int], int]:
    return h_from_f(f_triangle(c))


def skeleton_pure(c: SimplicialComplex, i: int) -> SimplicialComplex:
    """The subcomplex generated by the i-dimensional faces."""
    return SimplicialComplex(c.n, c.faces_of_size(i + 1))


def link(c: SimplicialComplex, f: Iterable[int]) -> SimplicialComplex:
    sf = set(f)
    faces = [tuple(sorted(set(g) - sf)) for g in c.facets if sf <= set(g)]
    return SimplicialComplex(c.n, faces)


def _boundary_rank(c: SimplicialComplex, k: int, q: int) -> int:
    """Rank of the boundary map from faces of size k to faces of size k - 1."""
    if k < 1:
        return 0
    src = c.faces_of_size(k)
    dst = {f: r for r, f in enumerate(c.faces_of_size(k - 1))}
    if not src or not dst:
        return 0
    cols = []
    for f in src:
        col: Vector = {}
        for t in range(k):
            col[dst[f[:t] + f[t + 1:]]] = 1 if t % 2 == 0 else q - 1
        cols.append(col)
    return Echelon(q, cols).rank


def reduced_homology_dims(c: SimplicialComplex, up_to: int | None = None,
                          q: int = DEFAULT_PRIME) -> list[int]:
    """dim of reduced homology H~_i over F_q for i = -1..min(dim, up_to)."""
    if c.is_void:
        return []
    top = c.dim if up_to is None else min(c.dim, up_to)
    fv = f_vector(c)
    ranks = [_boundary_rank(c, k, q) for k in range(top + 3)]
    # faces of size k sit in homological degree k - 1
    return [fv[k] - ranks[k] - ranks[k + 1] for k in range(top + 2)]


def is_cm_reisner(c: SimplicialComplex, q: int = DEFAULT_PRIME) -> bool:
    """Every link (including the complex itself) has homology only in top degree."""
    if c.is_void:
        return True
    for f in sorted(c.faces):
        lk = link(c, f)
        h = reduced_homology_dims(lk, q=q)
        if any(h[: lk.dim + 1]):
            return False
    return True


def socle_dims(c: SimplicialComplex, q: int = DEFAULT_PRIME) -> list[int]:
    """dim of the socle of the exterior face ring in degrees 0..dim+1.

    The socle in degree d is the common kernel of multiplication by every
    e_k from the degree-d to the degree-(d+1) part of K{c}.
    """
    if c.is_void:
        return []
    from .cartan import QuotientModule

    mod = QuotientModule(sr_ideal_exterior(c, q))
    out = []
    for d in range(c.dim + 2):
        dim = mod.dim(d)
        if d >= c.n:
            out.append(dim)
            continue
        rows: list[Vector] = []
        # stack the maps: row block k holds multiplication by e_k
        me = mod.dim(d + 1)
        for k in range(1, c.n + 1):
            cols = mod.mult(d, k)
            block = [dict() for _ in range(me)]
            for t, col in enumerate(cols):
                for r, x in col.items():
                    block[r][t] = x
            rows.extend(block)
        out.append(len(kernel_basis(Matrix(len(rows), dim, rows, q))))
    return out


def is_pure(c: SimplicialComplex) -> bool:
    return len({len(f) for f in c.facets}) <= 1
