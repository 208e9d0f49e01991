"""Property-verification suites V1-V12 over seeded random and exhaustive instances.

Every suite returns counts per named check plus failure witnesses that echo
the offending input and a command replaying the whole suite.  Reports hold
no timings or other run-dependent data, so equal configurations give
byte-identical reports.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from typing import Callable

from . import cartan as ct
from .errors import CartanShiftError
from .exterior import DEGLEX, DEGREVLEX, ExtIdeal, basis, lex, m_stats, minimal_generators
from .formats import dumps, ideal_to_json
from .generators import all_stable_ideals, random_complex, random_graded_ideal, random_stable_ideal
from .gin import gin_exterior, gin_symmetric
from .linalg import DEFAULT_PRIME, is_prime
from .shifting import (DELTA_E, DELTA_LEX, DELTA_S, adeg, adeg_i, deg, degree_report, is_cm,
                       is_componentwise_linear, is_gotzmann, is_sequentially_cm,
                       is_sequentially_cm_duval, iterated_betti, padded_leq, verify_axioms)
from .simplicial import (SimplicialComplex, alexander_dual, complex_from_nonfaces, facets_by_size,
                         h_triangle, is_cm_reisner, is_pure, socle_dims, sr_ideal_exterior,
                         sr_ideal_symmetric)
from .symmetric import sigma_ideal

SUITES = tuple(f"V{k}" for k in range(1, 13))

TITLES = {
    "V1": "closed Cartan-Betti formulas for stable ideals",
    "V2": "beta_0 agrees for J and gin(J)",
    "V3": "beta(J) <= beta(gin_tau J) <= beta(lex J)",
    "V4": "beta(gin_revlex J) <= beta(gin_deglex J)",
    "V5": "componentwise linear <=> gin equality <=> proper sequence",
    "V6": "Gotzmann <=> lex equality",
    "V7": "arithmetic degree under shifting",
    "V8": "shifting commutes with Alexander duality",
    "V9": "sdeg, degree chain and Cohen-Macaulayness",
    "V10": "iterated Betti numbers",
    "V11": "shifting axioms S1-S4",
    "V12": "lexsegment extremality and rigidity",
}

MAX_WITNESSES = 20
GENERIC_N_MAX = 5


@dataclass(frozen=True)
class RunConfig:
    prime: int = DEFAULT_PRIME
    seed: int = 0
    trials: int = 3
    i_max: int | None = None
    n_max: int | None = None
    samples: int = 25
    suites: tuple = SUITES
    truncate_above_p: bool = False
    exhaustive: bool = True

    def validate(self) -> None:
        if self.prime >= 2**31:
            raise ValueError("the prime must be below 2^31")
        if not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")
        if self.prime <= 2 * max(self.n_exterior, self.n_symmetric):
            raise ValueError("the prime must exceed 2 * n_max")
        if self.trials < 2:
            raise ValueError("trials must be at least 2")
        if self.samples < 0:
            raise ValueError("samples must be non-negative")
        if self.i_max is not None and self.i_max < 1:
            raise ValueError("i_max must be at least 1")
        if self.n_max is not None and self.n_max < 1:
            raise ValueError("n_max must be at least 1")
        unknown = [s for s in self.suites if s not in SUITES]
        if unknown:
            raise ValueError(f"unknown suites {unknown}")

    @property
    def n_exterior(self) -> int:
        return self.n_max if self.n_max is not None else 6

    @property
    def n_symmetric(self) -> int:
        return self.n_max if self.n_max is not None else 5

    def imax(self, n: int) -> int:
        return self.i_max if self.i_max is not None else n + 2

    def replay(self, suite: str) -> str:
        parts = ["cartanshift", "verify", "--suite", suite, "--seed", str(self.seed),
                 "--prime", str(self.prime), "--trials", str(self.trials),
                 "--samples", str(self.samples)]
        if self.n_max is not None:
            parts += ["--n-max", str(self.n_max)]
        if self.i_max is not None:
            parts += ["--imax", str(self.i_max)]
        if self.truncate_above_p:
            parts.append("--truncate-above-p")
        if not self.exhaustive:
            parts.append("--no-exhaustive")
        return " ".join(parts)

    def to_json(self) -> dict:
        d = asdict(self)
        d["suites"] = list(self.suites)
        return d


@dataclass
class SuiteResult:
    name: str
    samples: int = 0
    checks: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not any(self.failures.values())

    def to_json(self) -> dict:
        return {"title": TITLES[self.name], "passed": self.passed, "samples": self.samples,
                "checks": dict(sorted(self.checks.items())),
                "failures": dict(sorted(self.failures.items())),
                "witnesses": self.witnesses, "notes": dict(sorted(self.notes.items()))}


@dataclass
class VerifyReport:
    config: RunConfig
    suites: dict

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites.values())

    def to_json(self) -> dict:
        return {"config": self.config.to_json(), "passed": self.passed,
                "suites": {k: self.suites[k].to_json() for k in sorted(self.suites, key=SUITES.index)}}

    def dumps(self) -> str:
        return dumps(self.to_json())


class _Checker:
    def __init__(self, result: SuiteResult, cfg: RunConfig):
        self.result = result
        self.cfg = cfg

    def __call__(self, name: str, ok: bool, echo=None, detail=None) -> bool:
        r = self.result
        r.checks[name] = r.checks.get(name, 0) + 1
        if not ok:
            r.failures[name] = r.failures.get(name, 0) + 1
            if len(r.witnesses) < MAX_WITNESSES:
                r.witnesses.append({"check": name, "input": echo, "detail": detail,
                                    "replay": self.cfg.replay(r.name)})
        return ok

    def guard(self, name: str, echo, fn: Callable[[], None]) -> None:
        """Run one sample; a package error counts as a failed check."""
        try:
            fn()
        except CartanShiftError as exc:
            self(f"{name}:{type(exc).__name__}", False, echo, str(exc))


# -- instances and cached computations -------------------------------------------

def echo_ideal(j: ExtIdeal) -> dict:
    if j.is_monomial:
        return ideal_to_json(j)
    comps = {}
    for d in range(j.n + 1):
        b = basis(j.n, d)
        vecs = j.vectors(d)
        if vecs:
            comps[str(d)] = [[[list(b[c]), x] for c, x in sorted(v.items())] for v in vecs]
    return {"n": j.n, "ring": "exterior", "components": comps}


class Context:
    """Per-run caches; every entry is a deterministic function of the config."""

    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self._cache: dict = {}

    def _memo(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    # instances
    def graded_ideals(self, n: int) -> list[ExtIdeal]:
        cfg = self.cfg
        return self._memo(("graded", n), lambda: [
            random_graded_ideal(n, random.Random(f"graded/{cfg.seed}/{n}/{k}"), cfg.prime)
            for k in range(cfg.samples)])

    def stable_ideals(self) -> list[ExtIdeal]:
        cfg = self.cfg

        def build():
            out = []
            low = 4 if cfg.exhaustive else 0
            for n in range(1, min(low, cfg.n_exterior) + 1):
                out.extend(all_stable_ideals(n, cfg.prime))
            for n in range(low + 1, cfg.n_exterior + 1):
                out.extend(random_stable_ideal(n, random.Random(f"stable/{cfg.seed}/{n}/{k}"), cfg.prime)
                           for k in range(cfg.samples))
            return out
        return self._memo("stable", build)

    def complexes(self, n_max: int) -> list[SimplicialComplex]:
        cfg = self.cfg

        def build():
            out = [c for c in fixture_complexes() if c.n <= n_max]
            for k in range(cfg.samples):
                rng = random.Random(f"complex/{cfg.seed}/{n_max}/{k}")
                n = 2 + k % (n_max - 1) if n_max >= 2 else 1
                out.append(random_complex(n, rng.choice([0.05, 0.1, 0.2, 0.3]), rng))
            return out
        return self._memo(("complexes", n_max), build)

    # algebra
    def table(self, j: ExtIdeal) -> ct.CartanBettiTable:
        cfg = self.cfg
        return self._memo(("table", j.key()), lambda: ct.cartan_betti_direct(
            j, cfg.imax(j.n), cfg.seed, cfg.trials))

    def shown(self, t: ct.CartanBettiTable) -> ct.CartanBettiTable:
        return t.truncated() if self.cfg.truncate_above_p else t

    def gin(self, j: ExtIdeal, order: str = DEGREVLEX) -> ExtIdeal:
        return self._memo(("gin", order, j.key()),
                          lambda: gin_exterior(j, order, self.cfg.trials, self.cfg.seed).ideal)

    def lex(self, j: ExtIdeal) -> ExtIdeal:
        return self._memo(("lex", j.key()), lambda: lex(j))

    def shift(self, op, c: SimplicialComplex) -> SimplicialComplex:
        cfg = self.cfg
        return self._memo(("shift", op.name, c), lambda: op(c, cfg.seed, cfg.trials, cfg.prime))


def fixture_complexes() -> list[SimplicialComplex]:
    return [
        SimplicialComplex(3, [(1, 2), (1, 3), (2, 3)]),
        SimplicialComplex(4, [(1, 2), (3, 4)]),
        SimplicialComplex(4, [(1, 3), (1, 4), (2, 3), (2, 4)]),
        SimplicialComplex(4, [(1,), (2, 4), (3, 4)]),
        SimplicialComplex.simplex(3),
        SimplicialComplex(3, [()]),
        SimplicialComplex.void(3),
    ]


def _fixture_ideals(q: int) -> list[ExtIdeal]:
    return [ExtIdeal.from_monomials(4, [(1, 2), (3, 4)], q),
            ExtIdeal.from_monomials(3, [(1, 2)], q),
            ExtIdeal.from_monomials(3, [(1, 3)], q),
            ExtIdeal.zero(3, q)]


def _graded_samples(ctx: Context) -> list[ExtIdeal]:
    out = []
    for n in range(3, min(GENERIC_N_MAX, ctx.cfg.n_exterior) + 1):
        out.extend(ctx.graded_ideals(n))
    return out


def _equal(a: ct.CartanBettiTable, b: ct.CartanBettiTable, keys=None) -> bool:
    keys = keys if keys is not None else set(a.entries) | set(b.entries)
    return all(a[k] == b[k] for k in keys)


def _m_le(j: ExtIdeal) -> dict:
    return {(i, d): m_stats(j.monomials(d), j.n).le(i) for d in range(j.n + 1) for i in range(j.n + 1)}


def _m_i(j: ExtIdeal) -> dict:
    return {(i, d): m_stats(j.monomials(d), j.n).m_i.get(i, 0)
            for d in range(j.n + 1) for i in range(j.n + 1)}


def _keys_p(t: ct.CartanBettiTable, p: int) -> list:
    return [k for k in t.entries if k[2] == p]


# -- suites -------------------------------------------------------------------------

def suite_v1(ctx: Context, ck: _Checker) -> None:
    cfg = ctx.cfg
    for j in ctx.stable_ideals():
        ck.result.samples += 1
        echo = ideal_to_json(j)

        def run(j=j, echo=echo):
            direct = ctx.table(j)
            closed = ct.cartan_betti_closed_table(j, cfg.imax(j.n))
            ck("closed=direct", not ctx.shown(direct).differs(ctx.shown(closed)), echo,
               [list(k) for k in direct.differs(closed)[:5]])
            if j.n <= 4:
                mat = ct.cartan_betti_direct(j, cfg.imax(j.n), method="matrices")
                ck("strands=matrices", not mat.differs(direct), echo)
        ck.guard("sample", echo, run)
    j = ExtIdeal.from_monomials(3, [(1, 2)], cfg.prime)
    t = ct.cartan_betti_direct(j, max(5, cfg.imax(3)))
    ck("fixture beta_0j1", [t[(0, d, 1)] for d in range(4)] == [1, 2, 0, 0], ideal_to_json(j))
    ck("fixture beta_1j1", all(t[(1, d, 1)] == 0 for d in range(5)), ideal_to_json(j))
    ck("fixture beta_i,i+1,3", [t[(i, i + 1, 3)] for i in range(1, 6)] == [1, 2, 3, 4, 5],
       ideal_to_json(j))


def suite_v2(ctx: Context, ck: _Checker) -> None:
    for j in _graded_samples(ctx):
        ck.result.samples += 1
        echo = echo_ideal(j)

        def run(j=j, echo=echo):
            a, b = ctx.table(j), ctx.table(ctx.gin(j))
            ck("beta_0 equal", _equal(a, b, [k for k in a.entries if k[0] == 0]), echo)
            ck("hilbert preserved", ctx.gin(j).hilbert() == j.hilbert(), echo)
        ck.guard("sample", echo, run)


def suite_v3(ctx: Context, ck: _Checker) -> None:
    for j in _graded_samples(ctx):
        ck.result.samples += 1
        echo = echo_ideal(j)

        def run(j=j, echo=echo):
            tj = ctx.shown(ctx.table(j))
            tl = ctx.shown(ctx.table(ctx.lex(j)))
            for order in (DEGREVLEX, DEGLEX):
                tg = ctx.shown(ctx.table(ctx.gin(j, order)))
                ck(f"J<=gin_{order}", not tj.leq(tg), echo, [list(k) for k in tj.leq(tg)[:5]])
                ck(f"gin_{order}<=lex", not tg.leq(tl), echo, [list(k) for k in tg.leq(tl)[:5]])
            ck("J<=lex", not tj.leq(tl), echo)
        ck.guard("sample", echo, run)
    if ctx.cfg.exhaustive:
        for j in ctx.stable_ideals():
            if j.n > 4:
                continue
            ck.result.samples += 1
            echo = ideal_to_json(j)

            def run(j=j, echo=echo):
                ck("stable fixed by gin", ctx.gin(j) == j, echo)
                tj, tl = ctx.shown(ctx.table(j)), ctx.shown(ctx.table(ctx.lex(j)))
                ck("stable J<=lex", not tj.leq(tl), echo)
            ck.guard("sample", echo, run)


def suite_v4(ctx: Context, ck: _Checker) -> None:
    for j in _graded_samples(ctx):
        ck.result.samples += 1
        echo = echo_ideal(j)

        def run(j=j, echo=echo):
            g, gl = ctx.gin(j), ctx.gin(j, DEGLEX)
            a, b = ctx.shown(ctx.table(g)), ctx.shown(ctx.table(gl))
            ck("gin<=gin_deglex", not a.leq(b), echo, [list(k) for k in a.leq(b)[:5]])
            ml, mg = _m_le(gl), _m_le(g)
            ck("m(gin_deglex)<=m(gin)", all(ml[k] <= mg[k] for k in ml), echo)
        ck.guard("sample", echo, run)


def _connecting_consistency(j: ExtIdeal, cfg: RunConfig) -> bool:
    """Explicit cycle reduction and the exact-sequence identity agree for one g."""
    from .exterior import random_invertible, substitute

    g = random_invertible(j.n, random.Random(cfg.seed), cfg.prime)
    mod = ct.QuotientModule(substitute(g, j))
    i_max = min(3, cfg.imax(j.n))
    entries = ct.betti_of_module(mod, i_max + 1, range(1, j.n + 1))
    table = ct.CartanBettiTable(j.n, i_max + 1, entries)
    for p in range(1, j.n):
        for jdeg in range(j.n + i_max + 1):
            ranks = ct.connecting_ranks_from_table(table, p, jdeg, i_max)
            for i in range(1, i_max + 1):
                if ranks[i] != ct._connecting_rank_explicit(mod, p, i, jdeg):
                    return False
    return True


def suite_v5(ctx: Context, ck: _Checker) -> None:
    cfg = ctx.cfg
    samples = _fixture_ideals(cfg.prime) + _graded_samples(ctx)
    for k, j in enumerate(samples):
        ck.result.samples += 1
        echo = echo_ideal(j)

        def run(j=j, echo=echo, k=k):
            tj, tg = ctx.table(j), ctx.table(ctx.gin(j))
            all_eq = _equal(tj, tg)
            beta1 = _equal(tj, tg, [x for x in tj.entries if x[0] == 1 and x[2] == j.n])
            cl = is_componentwise_linear(j, cfg.seed, cfg.trials, deep=j.n <= 4, i_max=cfg.imax(j.n))
            proper = ct.is_proper_sequence(j, cfg.imax(j.n), cfg.seed, cfg.trials, table=tj)
            ck("four-way agreement", all_eq == beta1 == cl == proper.proper, echo,
               {"all_equal": all_eq, "beta_1jn_equal": beta1, "componentwise_linear": cl,
                "proper": proper.proper})
            if j.n <= 4 and k < 8:
                ck("delta routes agree", _connecting_consistency(j, cfg), echo)
        ck.guard("sample", echo, run)
    j = samples[0]
    tj, tg = ctx.table(j), ctx.table(ctx.gin(j))
    strict = [list(x) for x in sorted(tg.entries) if tj[x] < tg[x]][:3]
    ck("(e12,e34) not componentwise linear",
       not is_componentwise_linear(j, cfg.seed, cfg.trials) and bool(strict), ideal_to_json(j), strict)
    ck.result.notes["(e12,e34) strict positions"] = strict


def suite_v6(ctx: Context, ck: _Checker) -> None:
    cfg = ctx.cfg
    samples = _fixture_ideals(cfg.prime) + _graded_samples(ctx)
    for j in samples:
        ck.result.samples += 1
        echo = echo_ideal(j)

        def run(j=j, echo=echo):
            tj, tl = ctx.table(j), ctx.table(ctx.lex(j))
            all_eq = _equal(tj, tl)
            beta1 = _equal(tj, tl, [x for x in tj.entries if x[0] == 1 and x[2] == j.n])
            gotz = is_gotzmann(j)
            beta0 = _equal(tj, tl, [x for x in tj.entries if x[0] == 0])
            cl = is_componentwise_linear(j, cfg.seed, cfg.trials)
            ck("four-way agreement", all_eq == beta1 == gotz == (beta0 and cl), echo,
               {"all_equal": all_eq, "beta_1jn_equal": beta1, "gotzmann": gotz,
                "beta_0_and_cl": beta0 and cl})
            ck("lex is Gotzmann", is_gotzmann(ctx.lex(j)), echo)
        ck.guard("sample", echo, run)
    j = samples[0]
    tj, tl = ctx.table(j), ctx.table(ctx.lex(j))
    strict = [list(x) for x in tl.entries if tj[x] < tl[x]][:3]
    ck("(e12,e34) not Gotzmann", not is_gotzmann(j) and bool(strict), ideal_to_json(j), strict)


def suite_v7(ctx: Context, ck: _Checker) -> None:
    cfg = ctx.cfg
    strict = 0
    for c in ctx.complexes(cfg.n_exterior):
        ck.result.samples += 1
        echo = c.to_json()

        def run(c=c, echo=echo):
            nonlocal strict
            a = adeg_i(c)
            se, sl = ctx.shift(DELTA_E, c), ctx.shift(DELTA_LEX, c)
            ck("adeg_i <= adeg_i e", padded_leq(a, adeg_i(se)), echo)
            ck("adeg_i <= adeg_i lex", padded_leq(a, adeg_i(sl)), echo)
            ck("adeg_i e <= adeg_i lex", padded_leq(adeg_i(se), adeg_i(sl)), echo)
            if c.n <= cfg.n_symmetric:
                ck("adeg_i <= adeg_i s", padded_leq(a, adeg_i(ctx.shift(DELTA_S, c))), echo)
            seq = adeg(c) == adeg(se)
            ck("adeg equality <=> seq-CM oracle", seq == is_sequentially_cm_duval(c, cfg.prime), echo)
            strict += adeg(se) > adeg(c)
            ck("socle = facets by size", socle_dims(c, cfg.prime) == facets_by_size(c), echo,
               {"socle": socle_dims(c, cfg.prime), "facets": facets_by_size(c)})
            ck("adeg_i = generators of dual ideal", _dual_generator_counts(c) == facets_by_size(c), echo)
        ck.guard("sample", echo, run)
    ck("some strict adeg increase", strict >= 1, None, strict)
    ck.result.notes["strict adeg increases"] = strict


def _dual_generator_counts(c: SimplicialComplex) -> list[int]:
    """Entry i: minimal generators of J_{c*} of degree n - i."""
    if c.is_void:
        return []
    gens = minimal_generators(sr_ideal_exterior(alexander_dual(c)))
    return [sum(1 for g in gens if len(g) == c.n - i) for i in range(c.dim + 2)]


def suite_v8(ctx: Context, ck: _Checker) -> None:
    cfg = ctx.cfg
    for c in ctx.complexes(cfg.n_exterior):
        ck.result.samples += 1
        echo = c.to_json()

        def run(c=c, echo=echo):
            for op in (DELTA_E, DELTA_LEX):
                lhs = alexander_dual(ctx.shift(op, c))
                rhs = ctx.shift(op, alexander_dual(c))
                ck(f"dual commutes with {op.name}", lhs == rhs, echo,
                   {"dual_of_shift": lhs.to_json(), "shift_of_dual": rhs.to_json()})
        ck.guard("sample", echo, run)


def suite_v9(ctx: Context, ck: _Checker) -> None:
    cfg = ctx.cfg
    for c in ctx.complexes(cfg.n_symmetric):
        ck.result.samples += 1
        echo = c.to_json()

        def run(c=c, echo=echo):
            rep = degree_report(c, cfg.seed, cfg.trials, cfg.prime)
            ss = ctx.shift(DELTA_S, c)
            se = ctx.shift(DELTA_E, c)
            ck("deg <= adeg <= sdeg", rep.deg <= rep.adeg <= rep.sdeg, echo, rep.to_json())
            ck("sdeg = adeg of shift", rep.sdeg == adeg(ss), echo)
            ck("sdeg of shift = sdeg", adeg(ctx.shift(DELTA_S, ss)) == rep.sdeg, echo)
            ck("sdeg e-shift = adeg e-shift", adeg(ctx.shift(DELTA_S, se)) == adeg(se), echo)
            cm = is_cm(c, cfg.seed, cfg.trials, cfg.prime)
            ck("CM <=> shift pure <=> Reisner", cm == is_pure(ss) == is_cm_reisner(c, cfg.prime), echo)
            ck("CM <=> sdeg = deg", cm == (rep.sdeg == rep.deg), echo)
            if is_sequentially_cm(c, cfg.seed, cfg.trials, cfg.prime):
                ck("seq-CM => sdeg = adeg", rep.sdeg == rep.adeg, echo)
            for s in (ss, se):
                ck("shifted: pure <=> CM", is_pure(s) == is_cm_reisner(s, cfg.prime), echo)
                ck("shifted is seq-CM", is_sequentially_cm_duval(s, cfg.prime), echo)
            ck("sdeg stable under gin", adeg(ss) == _adeg_of_double_gin(c, cfg), echo)
        ck.guard("sample", echo, run)
    ht = SimplicialComplex(3, [(1, 2), (1, 3), (2, 3)])
    de = SimplicialComplex(4, [(1, 2), (3, 4)])
    r1 = degree_report(ht, cfg.seed, cfg.trials, cfg.prime)
    r2 = degree_report(de, cfg.seed, cfg.trials, cfg.prime)
    ck("fixture hollow triangle sdeg = deg = 3", r1.sdeg == r1.deg == 3, ht.to_json(), r1.to_json())
    ck("fixture disjoint edges sdeg 3 > adeg 2", (r2.sdeg, r2.adeg) == (3, 2), de.to_json(), r2.to_json())


def _adeg_of_double_gin(c: SimplicialComplex, cfg: RunConfig) -> int:
    g1 = gin_symmetric(sr_ideal_symmetric(c, cfg.prime), cfg.trials, cfg.seed).ideal
    g2 = gin_symmetric(g1, cfg.trials, cfg.seed + 1).ideal
    return adeg(complex_from_nonfaces(c.n, sigma_ideal(g2.minimal_generators(), c.n)))


def _tri_equal(a: dict, b: dict) -> bool:
    return all(a.get(k, 0) == b.get(k, 0) for k in set(a) | set(b))


def suite_v10(ctx: Context, ck: _Checker) -> None:
    cfg = ctx.cfg
    for c in ctx.complexes(cfg.n_symmetric):
        ck.result.samples += 1
        echo = c.to_json()

        def run(c=c, echo=echo):
            be = iterated_betti(c, DELTA_E, cfg.seed, cfg.trials, cfg.prime)
            bs = iterated_betti(c, DELTA_S, cfg.seed, cfg.trials, cfg.prime)
            h = h_triangle(c)
            seq = is_sequentially_cm(c, cfg.seed, cfg.trials, cfg.prime)
            ck("seq-CM <=> b^e = h", seq == _tri_equal(be, h), echo)
            ck("seq-CM <=> b^s = h", seq == _tri_equal(bs, h), echo)
            if seq:
                ck("seq-CM => b^e = b^s", _tri_equal(be, bs), echo)
            for op, b in ((DELTA_E, be), (DELTA_S, bs)):
                s = ctx.shift(op, c)
                top = c.dim + 1
                ck(f"sum top row = deg ({op.name})",
                   sum(v for (i, _), v in b.items() if i == top) == (deg(s) if top >= 0 else 0), echo)
                ck(f"sum = adeg ({op.name})", sum(b.values()) == adeg(s), echo)
                ck(f"invariant under {op.name}",
                   _tri_equal(iterated_betti(s, op, cfg.seed, cfg.trials, cfg.prime), b), echo)
        ck.guard("sample", echo, run)
    ht = SimplicialComplex(3, [(1, 2), (1, 3), (2, 3)])
    de = SimplicialComplex(4, [(1, 2), (3, 4)])
    b = iterated_betti(ht, DELTA_E, cfg.seed, cfg.trials, cfg.prime)
    ck("fixture hollow triangle", [b[(2, r)] for r in range(3)] == [1, 1, 1] and sum(b.values()) == 3,
       ht.to_json())
    b = iterated_betti(de, DELTA_E, cfg.seed, cfg.trials, cfg.prime)
    nz = {k: v for k, v in b.items() if v}
    ck("fixture disjoint edges", nz == {(1, 1): 1, (2, 0): 1, (2, 1): 1}, de.to_json())
    h = h_triangle(de)
    ck("disjoint edges h_22 = -1 != b_22", h[(2, 2)] == -1 and b[(2, 2)] == 0, de.to_json())


def suite_v11(ctx: Context, ck: _Checker) -> None:
    cfg = ctx.cfg
    for op, n_max in ((DELTA_E, cfg.n_exterior), (DELTA_LEX, cfg.n_exterior), (DELTA_S, cfg.n_symmetric)):
        cs = ctx.complexes(n_max)
        try:
            rep = verify_axioms(op, cs, cfg.seed, cfg.trials, cfg.prime)
        except CartanShiftError as exc:
            ck(f"{op.name}:{type(exc).__name__}", False, None, str(exc))
            continue
        ck.result.samples += rep.samples
        for axiom in ("S1", "S2", "S3", "S4"):
            bad = rep.violations[axiom]
            for _ in range(rep.samples - len(bad)):
                ck(f"{axiom} ({op.name})", True)
            for w in bad:
                ck(f"{axiom} ({op.name})", False, w)
    ht = SimplicialComplex(3, [(1, 2), (1, 3), (2, 3)])
    for op in (DELTA_E, DELTA_LEX, DELTA_S):
        ck(f"hollow triangle fixed by {op.name}", ctx.shift(op, ht) == ht, ht.to_json())


def suite_v12(ctx: Context, ck: _Checker) -> None:
    cfg = ctx.cfg
    stable = ctx.stable_ideals()
    for j in stable:
        ck.result.samples += 1
        echo = ideal_to_json(j)

        def run(j=j, echo=echo):
            lj = ctx.lex(j)
            ml, mj = _m_le(lj), _m_le(j)
            ck("m(lex) <= m(J)", all(ml[k] <= mj[k] for k in ml), echo)
            _rigid_pair(ctx, ck, lj, j, echo)
        ck.guard("sample", echo, run)
    # exhaustive: every dominated pair with equal Hilbert functions
    by_hilbert: dict = {}
    for j in stable:
        if j.n <= 4 and cfg.exhaustive:
            by_hilbert.setdefault((j.n, tuple(j.hilbert())), []).append(j)
    for group in by_hilbert.values():
        for a in group:
            for b in group:
                if a is b:
                    continue
                ma, mb = _m_le(a), _m_le(b)
                if all(ma[k] <= mb[k] for k in ma):
                    ck.result.samples += 1
                    echo = {"J": ideal_to_json(a), "J'": ideal_to_json(b)}
                    ck.guard("pair", echo, lambda a=a, b=b, echo=echo: _rigid_pair(ctx, ck, a, b, echo))


def _rigid_pair(ctx: Context, ck: _Checker, j: ExtIdeal, jp: ExtIdeal, echo) -> None:
    """J, J' stable, same Hilbert function, m_<=i(J_j) <= m_<=i(J'_j)."""
    tj, tp = ctx.table(j), ctx.table(jp)
    ck("beta(J') <= beta(J)", not ctx.shown(tp).leq(ctx.shown(tj)), echo)
    n = j.n
    eq_all = _equal(tj, tp)
    eq_n = _equal(tj, tp, _keys_p(tj, n))
    eq_1j = _equal(tj, tp, [k for k in _keys_p(tj, n) if k[0] == 1])
    eq_1 = (sum(tj[k] for k in _keys_p(tj, n) if k[0] == 1)
            == sum(tp[k] for k in _keys_p(tp, n) if k[0] == 1))
    eq_mi = _m_i(j) == _m_i(jp)
    eq_mle = _m_le(j) == _m_le(jp)
    ck("six-way rigidity", len({eq_all, eq_n, eq_1j, eq_1, eq_mi, eq_mle}) == 1, echo,
       [eq_all, eq_n, eq_1j, eq_1, eq_mi, eq_mle])


SUITE_FUNCTIONS = {
    "V1": suite_v1, "V2": suite_v2, "V3": suite_v3, "V4": suite_v4, "V5": suite_v5,
    "V6": suite_v6, "V7": suite_v7, "V8": suite_v8, "V9": suite_v9, "V10": suite_v10,
    "V11": suite_v11, "V12": suite_v12,
}


def run_suite(name: str, cfg: RunConfig, ctx: Context | None = None) -> SuiteResult:
    cfg.validate()
    if name not in SUITE_FUNCTIONS:
        raise ValueError(f"unknown suite {name!r}")
    ctx = ctx or Context(cfg)
    result = SuiteResult(name)
    SUITE_FUNCTIONS[name](ctx, _Checker(result, cfg))
    return result


def run(cfg: RunConfig) -> VerifyReport:
    cfg.validate()
    ctx = Context(cfg)
    return VerifyReport(cfg, {s: run_suite(s, cfg, ctx) for s in SUITES if s in cfg.suites})


def parse_suites(text: str) -> tuple:
    if text == "all":
        return SUITES
    names = tuple(s.strip().upper() for s in text.split(",") if s.strip())
    return tuple(s for s in SUITES if s in names) if all(s in SUITES for s in names) else names


def explore_report(n_max: int, samples: int, seed: int, trials: int = 3,
                   q: int = DEFAULT_PRIME) -> dict:
    from .shifting import explore
    cfg = RunConfig(prime=q, seed=seed, trials=trials, n_max=n_max, samples=samples)
    cs = Context(cfg).complexes(n_max)
    return explore(cs, seed, trials, q)

