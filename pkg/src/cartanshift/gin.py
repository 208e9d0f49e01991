"""Initial ideals and randomized generic initial ideals in E and S.

Genericity is certified empirically: several independent random changes of
coordinates must produce the same monomial ideal.  If they disagree, one
fresh round of trials is drawn before giving up.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Union

from .errors import GenericityFailure, StabilityFailure
from .exterior import (DEGREVLEX, ExtIdeal, basis, basis_index, is_squarefree_strongly_stable,
                       ordered_basis, random_invertible, substitute)
from .linalg import Echelon, dense_pivots, matmul_mod
from .symmetric import (SymIdeal, is_strongly_stable, sym_basis, sym_index,
                        symmetric_power_matrices)


@dataclass(frozen=True)
class GinResult:
    ideal: Union[ExtIdeal, SymIdeal]
    trials_used: int
    certified: bool


def initial_ideal(j: ExtIdeal, order: str = DEGREVLEX, d_max: int | None = None) -> ExtIdeal:
    """Degreewise initial ideal: pivots of each component with columns sorted by ``order``."""
    n = j.n
    if d_max is None:
        d_max = n
    comps = []
    for d in range(n + 1):
        if d > d_max or j.hilbert()[d] == 0:
            comps.append(frozenset())
            continue
        ob = ordered_basis(n, d, order)
        pos = basis_index(n, d)
        perm = {pos[m]: r for r, m in enumerate(ob)}
        ech = Echelon(j.q, ({perm[c]: x for c, x in v.items()} for v in j.vectors(d)))
        comps.append(frozenset(ob[r] for r in ech.pivots))
    return ExtIdeal(n, comps, j.q)


def _certify(compute: Callable[[random.Random], object], trials: int,
             rng: random.Random, what: str) -> tuple[object, int, bool]:
    if trials < 2:
        raise ValueError("at least two trials are needed to certify genericity")
    used = 0
    for _ in range(2):
        results = [compute(rng) for _ in range(trials)]
        used += trials
        if all(r == results[0] for r in results):
            return results[0], used, True
    raise GenericityFailure(f"{what}: {used} random coordinate changes disagree")


def gin_exterior(j: ExtIdeal, order: str = DEGREVLEX, trials: int = 3,
                 rng_seed: int = 0) -> GinResult:
    rng = random.Random(rng_seed)

    def once(r: random.Random) -> ExtIdeal:
        g = random_invertible(j.n, r, j.q)
        return initial_ideal(substitute(g, j), order)

    ideal, used, ok = _certify(once, trials, rng, "exterior gin")
    if not is_squarefree_strongly_stable(ideal):
        raise StabilityFailure("exterior gin is not squarefree strongly stable")
    return GinResult(ideal, used, ok)


def sym_initial_monomials(rows, n: int, d: int, q: int) -> frozenset:
    """Degrevlex initial monomials of the row space of a dense matrix over S_d."""
    b = sym_basis(n, d)
    return frozenset(b[c] for c in dense_pivots(rows, q))


def _times_variables(mons, n: int) -> frozenset:
    out = set()
    for m in mons:
        for k in range(n):
            out.add(m[:k] + (m[k] + 1,) + m[k + 1:])
    return frozenset(out)


def _hilbert_in_degree(gens, n: int, d: int) -> int:
    from .symmetric import divides
    return sum(1 for m in sym_basis(n, d) if any(divides(g, m) for g in gens))


def gin_symmetric(i: SymIdeal, trials: int = 3, rng_seed: int = 0) -> GinResult:
    """Revlex gin of I through degree d_max (n for squarefree input), validated one degree higher."""
    n, q = i.n, i.q
    top = i.d_max
    rng = random.Random(rng_seed)

    def once(r: random.Random) -> SymIdeal:
        g = random_invertible(n, r, q)
        mats = symmetric_power_matrices(g, n, top, q)
        comps = [frozenset()] * (top + 1)
        for d in range(top + 1):
            c = i.components[d]
            # in(V_{d-1}) * S_1 lies in in(V_d); often it already has the right size
            known = _times_variables(comps[d - 1], n) if d else frozenset()
            if len(known) == i.hilbert()[d]:
                comps[d] = known
                continue
            if isinstance(c, frozenset):
                if not c:
                    continue
                idx = sym_index(n, d)
                rows = mats[d][sorted(idx[m] for m in c)]
            else:
                if not c.shape[0]:
                    continue
                rows = matmul_mod(c, mats[d], q)
            comps[d] = sym_initial_monomials(rows, n, d, q)
        return SymIdeal(n, comps, q)

    ideal, used, ok = _certify(once, trials, rng, "symmetric gin")
    if not is_strongly_stable(ideal):
        raise StabilityFailure("symmetric gin is not strongly stable; try another prime")
    gens = ideal.minimal_generators()
    result = SymIdeal.from_monomials(n, gens, top, q)
    if result.hilbert() != i.hilbert()[:top + 1]:
        raise StabilityFailure("gin generators do not reproduce the Hilbert function")
    if i.is_monomial and i.d_max == top:
        expected = _hilbert_in_degree(i.minimal_generators(), n, top + 1)
        if _hilbert_in_degree(gens, n, top + 1) != expected:
            raise StabilityFailure(f"Hilbert function differs in degree {top + 1}; raise the degree bound")
    return GinResult(result, used, ok)
