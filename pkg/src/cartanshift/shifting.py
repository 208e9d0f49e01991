"""Algebraic shifting of simplicial complexes, degree functions and predicates.

Exterior shifting takes the complex of gin(J_c) for a term order on E;
symmetric shifting takes the complex of the stretched ideal gin(I_c)^sigma.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .cartan import cartan_betti_direct
from .errors import InvariantViolation, OracleDisagreement, RouteMismatch
from .exterior import (DEGLEX, DEGREVLEX, ExtIdeal, component_ideal, generated_degrees, lex,
                       multiply_by_linear_dims)
from .gin import gin_exterior, gin_symmetric
from .linalg import DEFAULT_PRIME
from .simplicial import (SimplicialComplex, complex_from_nonfaces, complex_of_ideal,
                         f_vector, facets_by_size, h_triangle, is_cm_reisner, is_pure,
                         is_shifted, skeleton_pure, sr_ideal_exterior, sr_ideal_symmetric)
from .symmetric import sigma_ideal

EXTERIOR = "exterior"
SYMMETRIC = "symmetric"


@dataclass(frozen=True)
class ShiftOperator:
    kind: str = EXTERIOR
    order: str = DEGREVLEX

    def __post_init__(self):
        if self.kind not in (EXTERIOR, SYMMETRIC):
            raise ValueError(f"unknown shifting kind {self.kind!r}")
        if self.order not in (DEGREVLEX, DEGLEX):
            raise ValueError(f"unknown term order {self.order!r}")

    @classmethod
    def parse(cls, name: str) -> "ShiftOperator":
        """'e' (exterior, revlex), 'tau-lex' (exterior, deglex) or 's' (symmetric)."""
        table = {"e": cls(EXTERIOR, DEGREVLEX), "tau-lex": cls(EXTERIOR, DEGLEX),
                 "s": cls(SYMMETRIC, DEGREVLEX)}
        if name not in table:
            raise ValueError(f"unknown shifting operation {name!r}")
        return table[name]

    @property
    def name(self) -> str:
        if self.kind == SYMMETRIC:
            return "s"
        return "e" if self.order == DEGREVLEX else "tau-lex"

    def __call__(self, c: SimplicialComplex, seed: int = 0, trials: int = 3,
                 q: int = DEFAULT_PRIME) -> SimplicialComplex:
        if self.kind == SYMMETRIC:
            return shift_symmetric(c, seed, trials, q)
        return shift_exterior(c, self.order, seed, trials, q)


DELTA_E = ShiftOperator(EXTERIOR, DEGREVLEX)
DELTA_LEX = ShiftOperator(EXTERIOR, DEGLEX)
DELTA_S = ShiftOperator(SYMMETRIC, DEGREVLEX)


def shift_exterior(c: SimplicialComplex, order: str = DEGREVLEX, seed: int = 0,
                   trials: int = 3, q: int = DEFAULT_PRIME) -> SimplicialComplex:
    gin = gin_exterior(sr_ideal_exterior(c, q), order, trials, seed)
    return complex_of_ideal(gin.ideal)


def shift_symmetric(c: SimplicialComplex, seed: int = 0, trials: int = 3,
                    q: int = DEFAULT_PRIME) -> SimplicialComplex:
    gin = gin_symmetric(sr_ideal_symmetric(c, q), trials, seed)
    return complex_from_nonfaces(c.n, sigma_ideal(gin.ideal.minimal_generators(), c.n))


# -- degree functions ----------------------------------------------------------

def deg(c: SimplicialComplex) -> int:
    """Number of faces of maximal dimension."""
    return facets_by_size(c)[-1] if not c.is_void else 0


def adeg_i(c: SimplicialComplex) -> list[int]:
    """Entry i counts facets of dimension i - 1."""
    return facets_by_size(c)


def adeg(c: SimplicialComplex) -> int:
    return len(c.facets)


def sdeg(c: SimplicialComplex, seed: int = 0, trials: int = 3, q: int = DEFAULT_PRIME) -> int:
    return adeg(shift_symmetric(c, seed, trials, q))


@dataclass(frozen=True)
class DegreeReport:
    deg: int
    adeg_i: list
    adeg: int
    sdeg: int

    def to_json(self) -> dict:
        return {"deg": self.deg, "adeg_i": list(self.adeg_i), "adeg": self.adeg, "sdeg": self.sdeg}


def degree_report(c: SimplicialComplex, seed: int = 0, trials: int = 3,
                  q: int = DEFAULT_PRIME) -> DegreeReport:
    rep = DegreeReport(deg(c), adeg_i(c), adeg(c), sdeg(c, seed, trials, q))
    if not rep.deg <= rep.adeg <= rep.sdeg:
        raise InvariantViolation(f"degree chain fails for {c}: {rep}")
    return rep


def padded_leq(a: list[int], b: list[int]) -> bool:
    size = max(len(a), len(b))
    a = list(a) + [0] * (size - len(a))
    b = list(b) + [0] * (size - len(b))
    return all(x <= y for x, y in zip(a, b))


# -- iterated Betti numbers ----------------------------------------------------

def init_segment(f, n: int) -> tuple[int, ...]:
    """The largest terminal segment {k, ..., n} contained in f."""
    s = set(f)
    k = n
    while k >= 1 and k in s:
        k -= 1
    return tuple(range(k + 1, n + 1))


def betti_from_facets(c: SimplicialComplex) -> dict[tuple[int, int], int]:
    """b_{i,r} = #{F facet : |init F| = i - r, |F| = i}."""
    if c.is_void:
        return {}
    d = c.dim + 1
    out = {(i, r): 0 for i in range(d + 1) for r in range(i + 1)}
    for f in c.facets:
        i = len(f)
        out[(i, i - len(init_segment(f, c.n)))] += 1
    return out


def iterated_betti(c: SimplicialComplex, op: ShiftOperator = DELTA_E, seed: int = 0,
                   trials: int = 3, q: int = DEFAULT_PRIME) -> dict[tuple[int, int], int]:
    """Iterated Betti numbers of c for the shifting ``op``, by two routes."""
    shifted = op(c, seed, trials, q)
    by_facets = betti_from_facets(shifted)
    by_h = h_triangle(shifted)
    if by_facets != by_h:
        raise RouteMismatch(f"facet count and h-triangle disagree on {shifted}")
    return by_facets


# -- ideal predicates ------------------------------------------------------------

def is_componentwise_linear(j: ExtIdeal, seed: int = 0, trials: int = 3,
                            deep: bool = False, i_max: int | None = None) -> bool:
    """Minimal generators per degree agree for J and gin(J).

    With ``deep=True`` every component ideal J_<t> is also checked to have a
    t-linear resolution up to homological degree ``i_max``; disagreement
    between the two checks raises OracleDisagreement.
    """
    g = gin_exterior(j, DEGREVLEX, trials, seed).ideal
    answer = generated_degrees(j) == generated_degrees(g)
    if deep:
        if _linear_components(j, seed, trials, i_max) != answer:
            raise OracleDisagreement(f"componentwise linearity checks disagree on {j}")
    return answer


def _linear_components(j: ExtIdeal, seed: int, trials: int, i_max: int | None) -> bool:
    n = j.n
    if i_max is None:
        i_max = n + 2
    for t in range(n + 1):
        if j.hilbert()[t] == 0:
            continue
        jt = component_ideal(j, t)
        table = cartan_betti_direct(jt, i_max, seed, trials, p_values=[n])
        # Tor_k(J_<t>)_{k+s} = beta_{k+1, k+s, n}(E/J_<t>); linear means s = t only
        for (i, jdeg, p), v in table.entries.items():
            if i >= 1 and v and jdeg != i - 1 + t:
                return False
    return True


def is_gotzmann(j: ExtIdeal) -> bool:
    return multiply_by_linear_dims(j) == multiply_by_linear_dims(lex(j))


# -- Cohen-Macaulay predicates -----------------------------------------------------

def is_sequentially_cm_duval(c: SimplicialComplex, q: int = DEFAULT_PRIME) -> bool:
    """Every pure skeleton (generated by the i-faces) is Cohen-Macaulay."""
    if c.is_void:
        return True
    return all(is_cm_reisner(skeleton_pure(c, i), q) for i in range(-1, c.dim + 1))


def is_cm(c: SimplicialComplex, seed: int = 0, trials: int = 3, q: int = DEFAULT_PRIME) -> bool:
    """Cohen-Macaulay iff the symmetric shift is pure; checked against Reisner."""
    answer = is_pure(shift_symmetric(c, seed, trials, q))
    if answer != is_cm_reisner(c, q):
        raise OracleDisagreement(f"CM tests disagree on {c}")
    return answer


def is_sequentially_cm(c: SimplicialComplex, seed: int = 0, trials: int = 3,
                       q: int = DEFAULT_PRIME) -> bool:
    """Sequentially CM iff exterior shifting keeps adeg; checked against Duval."""
    answer = adeg(c) == adeg(shift_exterior(c, DEGREVLEX, seed, trials, q))
    if answer != is_sequentially_cm_duval(c, q):
        raise OracleDisagreement(f"sequential CM tests disagree on {c}")
    return answer


# -- shifting axioms -------------------------------------------------------------

@dataclass
class AxiomReport:
    operator: str
    samples: int = 0
    violations: dict = field(default_factory=lambda: {"S1": [], "S2": [], "S3": [], "S4": []})

    @property
    def passed(self) -> bool:
        return not any(self.violations.values())

    def to_json(self) -> dict:
        return {"operator": self.operator, "samples": self.samples, "passed": self.passed,
                "violations": {k: v for k, v in sorted(self.violations.items())}}


def random_subcomplex(c: SimplicialComplex, rng: random.Random) -> SimplicialComplex:
    """Subcomplex generated by a random nonempty subset of the facets."""
    if c.is_void:
        return c
    keep = [f for f in c.facets if rng.random() < 0.5] or [rng.choice(c.facets)]
    return SimplicialComplex(c.n, keep)


def verify_axioms(op: ShiftOperator, complexes, seed: int = 0, trials: int = 3,
                  q: int = DEFAULT_PRIME) -> AxiomReport:
    """S1 shifted output, S2 idempotence, S3 f-vector, S4 monotonicity."""
    rng = random.Random(seed)
    rep = AxiomReport(op.name)
    for c in complexes:
        rep.samples += 1
        s = op(c, seed, trials, q)
        if not is_shifted(s):
            rep.violations["S1"].append(c.to_json())
        if op(s, seed, trials, q) != s:
            rep.violations["S2"].append(c.to_json())
        if f_vector(s) != f_vector(c):
            rep.violations["S3"].append(c.to_json())
        sub = random_subcomplex(c, rng)
        if not op(sub, seed, trials, q) <= s:
            rep.violations["S4"].append({"complex": c.to_json(), "subcomplex": sub.to_json()})
    return rep


def explore(complexes, seed: int = 0, trials: int = 3, q: int = DEFAULT_PRIME) -> dict:
    """Counts only: how often adeg and the iterated Betti numbers of the
    symmetric shift stay below those of the exterior shift."""
    total = adeg_s_le_e = betti_s_le_e = 0
    strict = []
    for c in complexes:
        total += 1
        se = shift_exterior(c, DEGREVLEX, seed, trials, q)
        ss = shift_symmetric(c, seed, trials, q)
        if adeg(ss) <= adeg(se):
            adeg_s_le_e += 1
        be, bs = betti_from_facets(se), betti_from_facets(ss)
        if all(bs.get(k, 0) <= be.get(k, 0) for k in set(be) | set(bs)):
            betti_s_le_e += 1
        if adeg(ss) < adeg(se):
            strict.append(c.to_json())
    return {"samples": total, "adeg_s_le_adeg_e": adeg_s_le_e,
            "betti_s_le_betti_e": betti_s_le_e, "adeg_s_lt_adeg_e": strict}
