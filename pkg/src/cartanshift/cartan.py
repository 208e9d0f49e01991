"""Cartan complexes of M = E/J and their homology (Cartan-Betti numbers).

The Cartan complex of M with respect to v_1, ..., v_p has chain groups
C_i = M (x) span{x^(a) : |a| = i} (divided powers) and differential

    d(m x^(a)) = sum_{a_k > 0} (m . v_k) x^(a - e_k),

with E acting on M from the right.  The internal degree of m x^(a) is
deg m + |a|, so C_i(p)_j = M_{j-i} (x) (divided powers of degree i).

Two routes compute the homology.  For a monomial ideal and a coordinate
sequence the complex splits into multigraded strands, each a small complex
on subsets of the sequence variables.  Otherwise a random change of
coordinates is applied and the graded pieces are reduced by sparse exact
elimination.  Squarefree strongly stable ideals need no substitution, since
the coordinate sequence e_{n-p+1}, ..., e_n is already generic for them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import GenericityFailure, NotStable
from .exterior import (ExtIdeal, basis, basis_index, is_squarefree_strongly_stable,
                       m_stats, minimal_generators, random_invertible, right_mult_sign,
                       substitute)
from .linalg import Echelon, Matrix, Vector


@lru_cache(maxsize=None)
def compositions(i: int, p: int) -> tuple[tuple[int, ...], ...]:
    """All a in N^p with |a| = i, in reverse lexicographic order of a."""
    if p == 0:
        return ((),) if i == 0 else ()
    out = []
    for first in range(i, -1, -1):
        for rest in compositions(i - first, p - 1):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _composition_index(i: int, p: int) -> dict:
    return {a: k for k, a in enumerate(compositions(i, p))}


class QuotientModule:
    """M = E/J with a standard-monomial basis in every degree.

    For monomial J the basis is the set of monomials outside J.  Otherwise
    it is the set of non-pivot columns of the reduced echelon form of J_d,
    and products are brought to normal form by the reduced rows.
    """

    def __init__(self, j: ExtIdeal):
        self.ideal = j
        self.n = n = j.n
        self.q = j.q
        self.basis: list[tuple] = []
        self.index: list[dict] = []
        self._reducers: list[dict] = []
        for d in range(n + 1):
            c = j.components[d]
            if isinstance(c, frozenset):
                std = [m for m in basis(n, d) if m not in c]
                red = None
            else:
                b = basis(n, d)
                rows = dict(Echelon(j.q, c.vectors()).reduced_rows())
                std = [b[k] for k in range(len(b)) if k not in rows]
                red = rows
            self.basis.append(tuple(std))
            self.index.append({m: k for k, m in enumerate(std)})
            self._reducers.append(red)
        self._mult: dict = {}

    def dim(self, d: int) -> int:
        return len(self.basis[d]) if 0 <= d <= self.n else 0

    def hilbert(self) -> list[int]:
        return [self.dim(d) for d in range(self.n + 1)]

    def _normal_form(self, d: int, m: tuple, coef: int) -> Vector:
        """Class of coef * e_m (m of degree d) in the standard basis of M_d."""
        q = self.q
        pos = self.index[d].get(m)
        if pos is not None:
            return {pos: coef % q}
        red = self._reducers[d]
        if red is None:
            return {}
        col = basis_index(self.n, d)[m]
        row = red[col]
        b = basis(self.n, d)
        out = {}
        for k, x in row.items():
            if k != col:
                out[self.index[d][b[k]]] = (-coef * x) % q
        return out

    def mult(self, d: int, k: int) -> list[Vector]:
        """Right multiplication by e_k: column t is the image of basis[d][t]."""
        key = (d, k)
        if key not in self._mult:
            cols = []
            for m in self.basis[d] if d < self.n else ():
                if k in m:
                    cols.append({})
                else:
                    t = tuple(sorted(m + (k,)))
                    cols.append(self._normal_form(d + 1, t, right_mult_sign(m, k)))
            if d >= self.n:
                cols = [{} for _ in self.basis[d]] if 0 <= d <= self.n else []
            self._mult[key] = cols
        return self._mult[key]


def default_sequence(n: int, p: int) -> tuple[int, ...]:
    return tuple(range(n - p + 1, n + 1))


def nested_sequence(n: int, p: int) -> tuple[int, ...]:
    """v_k = e_{n-k+1}: the first p terms do not depend on how far we go."""
    return tuple(range(n, n - p, -1))


def _boundary_columns(mod: QuotientModule, seq: Sequence[int], i: int, jdeg: int) -> list[Vector]:
    """Columns of d_i : C_i(seq; M)_jdeg -> C_{i-1}(seq; M)_jdeg."""
    p = len(seq)
    d = jdeg - i
    md, me = mod.dim(d), mod.dim(d + 1)
    if i <= 0 or md == 0:
        return []
    target = _composition_index(i - 1, p)
    mults = [mod.mult(d, v) for v in seq]
    cols = []
    for a in compositions(i, p):
        blocks = []
        for k in range(p):
            if a[k]:
                b = a[:k] + (a[k] - 1,) + a[k + 1:]
                blocks.append((target[b] * me, mults[k]))
        for t in range(md):
            col: Vector = {}
            for off, mu in blocks:
                for r, x in mu[t].items():
                    col[off + r] = x
            cols.append(col)
    return cols


def chain_dim(mod: QuotientModule, p: int, i: int, jdeg: int) -> int:
    if i < 0:
        return 0
    return mod.dim(jdeg - i) * comb(i + p - 1, p - 1) if p > 0 else (mod.dim(jdeg) if i == 0 else 0)


def boundary_matrix(j: ExtIdeal | QuotientModule, p: int, i: int, jdeg: int,
                    sequence: Sequence[int] | None = None) -> Matrix:
    """Matrix of d_i : C_i(v; E/J)_jdeg -> C_{i-1}(v; E/J)_jdeg.

    The sequence defaults to e_{n-p+1}, ..., e_n.  Columns are indexed by
    (a, m) with a in ``compositions(i, p)`` and m a standard monomial of
    degree jdeg - i, the composition varying slowest; rows likewise.
    """
    mod = j if isinstance(j, QuotientModule) else QuotientModule(j)
    seq = tuple(sequence) if sequence is not None else default_sequence(mod.n, p)
    nrows = chain_dim(mod, p, i - 1, jdeg)
    ncols = chain_dim(mod, p, i, jdeg)
    if ncols == 0 or nrows == 0:
        return Matrix.zeros(nrows, ncols, mod.q)
    return Matrix.from_columns(nrows, _boundary_columns(mod, seq, i, jdeg), mod.q)


def boundary_rank(mod: QuotientModule, seq: Sequence[int], i: int, jdeg: int) -> int:
    if chain_dim(mod, len(seq), i - 1, jdeg) == 0:
        return 0
    return Echelon(mod.q, _boundary_columns(mod, seq, i, jdeg)).rank


@dataclass
class CartanBettiTable:
    """beta_{i,j,p} for 0 <= i <= i_max, 0 <= j <= n + i, 1 <= p <= n."""

    n: int
    i_max: int
    entries: dict = field(default_factory=dict)
    truncated_above_p: bool = False

    def __getitem__(self, key: tuple[int, int, int]) -> int:
        return self.entries.get(key, 0)

    def keys(self) -> list[tuple[int, int, int]]:
        return sorted(self.entries, key=lambda k: (k[2], k[0], k[1]))

    def p_values(self) -> list[int]:
        return sorted({k[2] for k in self.entries})

    def truncated(self) -> "CartanBettiTable":
        entries = {k: (0 if k[0] > k[2] else v) for k, v in self.entries.items()}
        return CartanBettiTable(self.n, self.i_max, entries, True)

    def leq(self, other: "CartanBettiTable") -> list[tuple[int, int, int]]:
        """Positions where self exceeds other (empty iff self <= other entrywise)."""
        keys = set(self.entries) | set(other.entries)
        return sorted(k for k in keys if self[k] > other[k])

    def differs(self, other: "CartanBettiTable") -> list[tuple[int, int, int]]:
        keys = set(self.entries) | set(other.entries)
        return sorted(k for k in keys if self[k] != other[k])

    def to_json(self) -> dict:
        return {
            "table": {f"{i},{j},{p}": v for (i, j, p), v in sorted(self.entries.items())},
            "i_max": self.i_max,
            "truncated_above_p": self.truncated_above_p,
        }

    @classmethod
    def from_json(cls, data: dict, n: int) -> "CartanBettiTable":
        entries = {tuple(int(x) for x in k.split(",")): int(v) for k, v in data["table"].items()}
        return cls(n, int(data["i_max"]), entries, bool(data.get("truncated_above_p", False)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CartanBettiTable):
            return NotImplemented
        return (self.n, self.i_max, self.truncated_above_p) == (
            other.n, other.i_max, other.truncated_above_p) and not self.differs(other)


# -- multigraded strands (monomial ideals, coordinate sequences) -----------

def _strand_homology(j: ExtIdeal, fixed: tuple[int, ...], seq_vars: tuple[int, ...]) -> list[int]:
    """Homology dims, by |T|, of the strand on subsets T of seq_vars.

    Its chains are T with fixed u T outside J; the differential sends T to
    the signed sum of T u {k}, k in seq_vars \\ T.
    """
    q = j.q
    s = len(seq_vars)
    layers = []
    for t in range(s + 1):
        layer = []
        for tt in combinations(seq_vars, t):
            face = tuple(sorted(fixed + tt))
            if face not in j.monomials(len(face)):
                layer.append(face)
        layers.append(layer)
    ranks = [0] * (s + 2)
    for t in range(s):
        src, dst = layers[t], layers[t + 1]
        if not src or not dst:
            continue
        pos = {f: r for r, f in enumerate(dst)}
        cols = []
        for face in src:
            col: Vector = {}
            for k in seq_vars:
                if k in face:
                    continue
                tgt = pos.get(tuple(sorted(face + (k,))))
                if tgt is not None:
                    col[tgt] = right_mult_sign(face, k) % q
            cols.append(col)
        ranks[t + 1] = Echelon(q, cols).rank
    # ranks[t + 1] = rank of the map layer t -> layer t + 1
    return [len(layers[t]) - ranks[t + 1] - ranks[t] for t in range(s + 1)]


def _betti_strands(j: ExtIdeal, p: int, i_max: int) -> dict:
    n = j.n
    seq = default_sequence(n, p)
    rest = tuple(range(1, n - p + 1))
    out: dict = {}
    for nsize in range(len(rest) + 1):
        for fixed in combinations(rest, nsize):
            if fixed in j.monomials(nsize):
                continue
            for ssize in range(p + 1):
                for svars in combinations(seq, ssize):
                    h = _strand_homology(j, fixed, svars)
                    for t, dim in enumerate(h):
                        if not dim:
                            continue
                        for i in range(i_max + 1):
                            jdeg = i + nsize + t
                            if ssize == 0:
                                count = 1 if jdeg == nsize else 0
                            else:
                                count = comb(jdeg - nsize - 1, ssize - 1) if jdeg - nsize >= ssize else 0
                            if count:
                                key = (i, jdeg, p)
                                out[key] = out.get(key, 0) + count * dim
    return out


# -- direct linear algebra ---------------------------------------------------

def _betti_matrices(mod: QuotientModule, p: int, i_max: int) -> dict:
    n = mod.n
    seq = nested_sequence(n, p)
    out = {}
    ranks: dict = {}

    def r(i: int, jdeg: int) -> int:
        if (i, jdeg) not in ranks:
            ranks[(i, jdeg)] = boundary_rank(mod, seq, i, jdeg)
        return ranks[(i, jdeg)]

    for i in range(i_max + 1):
        for jdeg in range(i, n + i + 1):
            dim = chain_dim(mod, p, i, jdeg)
            if dim == 0:
                continue
            out[(i, jdeg, p)] = dim - r(i, jdeg) - r(i + 1, jdeg)
    return out


def _full_table(n: int, i_max: int, entries: dict, p_values: Iterable[int]) -> dict:
    full = {}
    for p in p_values:
        for i in range(i_max + 1):
            for jdeg in range(n + i + 1):
                full[(i, jdeg, p)] = entries.get((i, jdeg, p), 0)
    return full


def _is_stable_monomial(j: ExtIdeal) -> bool:
    return j.is_monomial and is_squarefree_strongly_stable(j)


def betti_of_module(mod: QuotientModule, i_max: int, p_values: Iterable[int]) -> dict:
    entries = {}
    for p in p_values:
        entries.update(_betti_matrices(mod, p, i_max))
    return entries


def _certified(compute, trials: int, rng: random.Random, what: str):
    if trials < 2:
        raise ValueError("at least two trials are needed to certify genericity")
    for _ in range(2):
        results = [compute(rng) for _ in range(trials)]
        if all(x == results[0] for x in results):
            return results[0]
    raise GenericityFailure(f"{what}: random coordinate changes disagree")


def cartan_betti_direct(j: ExtIdeal, i_max: int | None = None, rng_seed: int = 0,
                        trials: int = 3, truncate_above_p: bool = False,
                        p_values: Iterable[int] | None = None,
                        method: str = "auto") -> CartanBettiTable:
    """Cartan-Betti numbers of E/J by homology of Cartan complexes.

    ``method`` is "auto", "strands" (monomial J, coordinate sequence) or
    "matrices".  Non-stable ideals are first moved to generic coordinates.
    """
    n = j.n
    if i_max is None:
        i_max = n + 2
    if i_max < 0:
        raise ValueError("i_max must be non-negative")
    ps = sorted(set(p_values)) if p_values is not None else list(range(1, n + 1))
    stable = _is_stable_monomial(j)
    if stable:
        if method == "matrices":
            entries = betti_of_module(QuotientModule(j), i_max, ps)
        else:
            entries = {}
            for p in ps:
                entries.update(_betti_strands(j, p, i_max))
    else:
        if method == "strands":
            raise NotStable("the strand route needs a squarefree strongly stable ideal")
        rng = random.Random(rng_seed)

        def once(r: random.Random) -> dict:
            g = random_invertible(n, r, j.q)
            return betti_of_module(QuotientModule(substitute(g, j)), i_max, ps)

        entries = _certified(once, trials, rng, "Cartan-Betti numbers")
    table = CartanBettiTable(n, i_max, _full_table(n, i_max, entries, ps))
    return table.truncated() if truncate_above_p else table


def cartan_betti_closed(j: ExtIdeal, i: int, jdeg: int, p: int) -> int:
    """Closed formula for squarefree strongly stable J."""
    if not j.is_monomial or not is_squarefree_strongly_stable(j):
        raise NotStable("closed formulas need a squarefree strongly stable ideal")
    return _closed(j, minimal_generators(j), i, jdeg, p)


def _closed(j: ExtIdeal, gens, i: int, jdeg: int, p: int) -> int:
    n = j.n
    if i < 0:
        return 0
    if i == 0:
        if jdeg < 0 or jdeg > n:
            return 0
        comp = j.monomials(jdeg)
        return comb(n - p, jdeg) - m_stats(comp, n).le(n - p)
    stats = m_stats(gens, n)
    total = 0
    for k in range(n - p + 1, n + 1):
        m = stats.m_ij.get((k, jdeg - i + 1), 0)
        if m:
            total += m * comb(k + p - n + i - 2, i - 1)
    return total


def cartan_betti_closed_table(j: ExtIdeal, i_max: int | None = None,
                              truncate_above_p: bool = False) -> CartanBettiTable:
    if not j.is_monomial or not is_squarefree_strongly_stable(j):
        raise NotStable("closed formulas need a squarefree strongly stable ideal")
    n = j.n
    if i_max is None:
        i_max = n + 2
    gens = minimal_generators(j)
    entries = {}
    for p in range(1, n + 1):
        for i in range(i_max + 1):
            for jdeg in range(n + i + 1):
                entries[(i, jdeg, p)] = _closed(j, gens, i, jdeg, p)
    table = CartanBettiTable(n, i_max, entries)
    return table.truncated() if truncate_above_p else table


# -- connecting maps --------------------------------------------------------

def _connecting_rank_explicit(mod: QuotientModule, p_from: int, i: int, jdeg: int) -> int:
    """rank of delta_i : H_i(v_1..v_{p+1})_{jdeg-1} -> H_i(v_1..v_p)_jdeg."""
    n, q = mod.n, mod.q
    big = nested_sequence(n, p_from + 1)
    small = big[:p_from]
    v = big[p_from]
    src_deg = jdeg - 1
    d = src_deg - i
    if mod.dim(d) == 0 or chain_dim(mod, p_from, i, jdeg) == 0:
        return 0
    # cycles of C_i(big)_{jdeg-1}
    cols = _boundary_columns(mod, big, i, src_deg)
    ncols = chain_dim(mod, p_from + 1, i, src_deg)
    if cols:
        nrows = chain_dim(mod, p_from + 1, i - 1, src_deg)
        cycles = _kernel(Matrix.from_columns(nrows, cols, q))
    else:
        cycles = [{c: 1} for c in range(ncols)]
    # g_0: the part with a_{p+1} = 0, then multiply by v
    md, me = mod.dim(d), mod.dim(d + 1)
    big_comps = compositions(i, p_from + 1)
    small_index = _composition_index(i, p_from)
    mu = mod.mult(d, v)
    images = []
    for z in cycles:
        w: Vector = {}
        for c, x in z.items():
            a = big_comps[c // md]
            if a[-1]:
                continue
            off = small_index[a[:-1]] * me
            for r, y in mu[c % md].items():
                w[off + r] = (w.get(off + r, 0) + x * y) % q
        w = {k: x for k, x in w.items() if x}
        if w:
            images.append(w)
    if not images:
        return 0
    boundaries = Echelon(q, _boundary_columns(mod, small, i + 1, jdeg))
    before = boundaries.rank
    for w in images:
        boundaries.add(w)
    return boundaries.rank - before


def _kernel(m: Matrix) -> list[Vector]:
    from .linalg import kernel_basis
    return kernel_basis(m)


def connecting_ranks_from_table(table: CartanBettiTable, p_from: int, jdeg: int,
                                i_max: int | None = None) -> dict[int, int]:
    """All ranks of delta_i into H_i(p_from)_jdeg from the long exact sequence.

    Exactness gives rank delta_0 = h_0(p) - h_0(p+1) in degree jdeg and
    rank delta_i = h_i(p)_j + h_{i-1}(p+1)_{j-1} - h_i(p+1)_j - rank delta_{i-1}.
    """
    if table.truncated_above_p:
        raise ValueError("the exact sequence needs untruncated homology")
    if i_max is None:
        i_max = table.i_max
    p = p_from
    out = {0: table[(0, jdeg, p)] - table[(0, jdeg, p + 1)]}
    for i in range(1, i_max + 1):
        out[i] = (table[(i, jdeg, p)] + table[(i - 1, jdeg - 1, p + 1)]
                  - table[(i, jdeg, p + 1)] - out[i - 1])
    return out


def connecting_map_rank(j: ExtIdeal, p_from: int, i: int, jdeg: int, rng_seed: int = 0,
                        trials: int = 3) -> int:
    """Rank of delta_i : H_i(v_1..v_{p+1}; E/J)(-1)_jdeg -> H_i(v_1..v_p; E/J)_jdeg
    for a generic sequence, computed from explicit cycles."""
    n = j.n
    if not 1 <= p_from < n:
        raise ValueError(f"need 1 <= p_from < n, got {p_from}")
    if i < 1:
        raise ValueError("connecting maps are considered for i >= 1")
    if _is_stable_monomial(j):
        return _connecting_rank_explicit(QuotientModule(j), p_from, i, jdeg)
    rng = random.Random(rng_seed)

    def once(r: random.Random) -> int:
        g = random_invertible(n, r, j.q)
        return _connecting_rank_explicit(QuotientModule(substitute(g, j)), p_from, i, jdeg)

    return _certified(once, trials, rng, "connecting map rank")


@dataclass(frozen=True)
class ProperSequenceResult:
    proper: bool
    witness: tuple[int, int, int, int] | None = None  # (p_from, i, jdeg, rank)

    def __bool__(self) -> bool:
        return self.proper


def is_proper_sequence(j: ExtIdeal, i_max: int | None = None, rng_seed: int = 0,
                       trials: int = 3, table: CartanBettiTable | None = None,
                       explicit: bool = False) -> ProperSequenceResult:
    """Whether a generic sequence is proper for E/J, with a witness if not.

    By default the ranks come from a certified Cartan-Betti table through the
    long exact sequence; ``explicit=True`` reduces actual cycles instead.
    """
    n = j.n
    if i_max is None:
        i_max = n + 2
    if explicit:
        for p in range(1, n):
            for i in range(1, i_max + 1):
                for jdeg in range(i + 1, n + i + 1):
                    r = connecting_map_rank(j, p, i, jdeg, rng_seed, trials)
                    if r:
                        return ProperSequenceResult(False, (p, i, jdeg, r))
        return ProperSequenceResult(True)
    if table is None or table.i_max < i_max or table.truncated_above_p:
        table = cartan_betti_direct(j, i_max, rng_seed, trials)
    for p in range(1, n):
        for jdeg in range(n + i_max + 1):
            ranks = connecting_ranks_from_table(table, p, jdeg, i_max)
            for i in range(1, i_max + 1):
                if ranks[i]:
                    return ProperSequenceResult(False, (p, i, jdeg, ranks[i]))
    return ProperSequenceResult(True)
