"""Seeded random instances and exhaustive enumerations for the verifier."""

from __future__ import annotations

import random
from itertools import combinations

from .exterior import ExtIdeal, basis
from .linalg import DEFAULT_PRIME
from .simplicial import SimplicialComplex


def random_complex(n: int, density: float, rng: random.Random) -> SimplicialComplex:
    """One random facet plus every nonempty subset kept with probability ``density``."""
    first = tuple(v for v in range(1, n + 1) if rng.random() < 0.5) or (rng.randint(1, n),)
    chosen = [first]
    for d in range(1, n + 1):
        for f in combinations(range(1, n + 1), d):
            if rng.random() < density:
                chosen.append(f)
    return SimplicialComplex(n, chosen)


def stable_closure(gens, n: int) -> set[tuple[int, ...]]:
    """Smallest set of monomials containing gens and closed under i -> j < i exchanges."""
    todo = [tuple(sorted(g)) for g in gens]
    seen: set = set()
    while todo:
        m = todo.pop()
        if m in seen:
            continue
        seen.add(m)
        sm = set(m)
        for i in m:
            for k in range(1, i):
                if k not in sm:
                    todo.append(tuple(sorted((sm - {i}) | {k})))
    return seen


def random_stable_ideal(n: int, rng: random.Random, q: int = DEFAULT_PRIME) -> ExtIdeal:
    k = rng.randint(1, 3)
    gens = []
    for _ in range(k):
        d = rng.randint(2, max(2, n - 1)) if n >= 2 else 1
        d = min(d, n)
        gens.append(tuple(sorted(rng.sample(range(1, n + 1), d))))
    return ExtIdeal.from_monomials(n, stable_closure(gens, n), q)


def random_graded_ideal(n: int, rng: random.Random, q: int = DEFAULT_PRIME) -> ExtIdeal:
    """Ideal generated by 1-3 forms, each a random combination of a few monomials."""
    polys = []
    for _ in range(rng.randint(1, 3)):
        d = rng.randint(2, max(2, n - 1))
        mons = basis(n, d)
        support = rng.sample(mons, min(len(mons), rng.randint(1, 3)))
        polys.append({m: rng.randrange(1, q) for m in support})
    return ExtIdeal.from_polynomials(n, polys, q)


def all_stable_ideals(n: int, q: int = DEFAULT_PRIME) -> list[ExtIdeal]:
    """Every squarefree strongly stable ideal of E on n variables except E itself."""
    levels = [list(basis(n, d)) for d in range(n + 1)]

    def stable_sets(d: int, required: frozenset) -> list[frozenset]:
        # closed subsets of E_d containing `required`, built as stable closures
        out = {frozenset(stable_closure(required, n))} if required else {frozenset()}
        frontier = list(out)
        while frontier:
            nxt = []
            for s in frontier:
                for m in levels[d]:
                    if m not in s:
                        t = frozenset(stable_closure(set(s) | {m}, n))
                        if t not in out:
                            out.add(t)
                            nxt.append(t)
            frontier = nxt
        return sorted(out, key=lambda s: (len(s), sorted(s)))

    results = []

    def extend(d: int, comps: list[frozenset]) -> None:
        if d > n:
            results.append(ExtIdeal(n, comps, q))
            return
        prev = comps[-1] if comps else frozenset()
        required = frozenset(tuple(sorted(m + (k,))) for m in prev
                             for k in range(1, n + 1) if k not in m)
        for s in stable_sets(d, required):
            extend(d + 1, comps + [s])

    # degree 0 stays empty: the unit ideal is excluded
    extend(1, [frozenset()])
    return results
