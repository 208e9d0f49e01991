"""JSON file formats for complexes, monomial ideals and Betti tables."""

from __future__ import annotations

import json
from typing import Any

from .exterior import ExtIdeal, minimal_generators
from .linalg import DEFAULT_PRIME
from .simplicial import SimplicialComplex
from .symmetric import SymIdeal

EXTERIOR = "exterior"
SYMMETRIC = "symmetric"


class FormatError(ValueError):
    """Malformed input file."""


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"


def _load(text_or_obj) -> dict:
    if isinstance(text_or_obj, dict):
        return text_or_obj
    try:
        data = json.loads(text_or_obj)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError("top-level JSON value must be an object")
    return data


def _int_list(x, what: str) -> list[int]:
    if not isinstance(x, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in x):
        raise FormatError(f"{what} must be a list of integers, got {x!r}")
    return x


def _n(data: dict) -> int:
    n = data.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise FormatError("'n' must be a non-negative integer")
    return n


def read_complex(text_or_obj) -> SimplicialComplex:
    data = _load(text_or_obj)
    n = _n(data)
    facets = data.get("facets")
    if not isinstance(facets, list):
        raise FormatError("'facets' must be a list")
    out = []
    for f in facets:
        f = _int_list(f, "facet")
        if len(set(f)) != len(f) or any(v < 1 or v > n for v in f):
            raise FormatError(f"facet {f} is not a subset of [{n}]")
        out.append(f)
    return SimplicialComplex(n, out)


def complex_to_json(c: SimplicialComplex) -> dict:
    return c.to_json()


def read_ideal(text_or_obj, q: int = DEFAULT_PRIME):
    """An ExtIdeal or SymIdeal from ``{"n", "ring", "generators"}``."""
    data = _load(text_or_obj)
    n = _n(data)
    ring = data.get("ring")
    gens = data.get("generators")
    if not isinstance(gens, list):
        raise FormatError("'generators' must be a list")
    if ring == EXTERIOR:
        out = []
        for g in gens:
            g = _int_list(g, "exterior generator")
            if len(set(g)) != len(g) or any(v < 1 or v > n for v in g):
                raise FormatError(f"exterior generator {g} is not a subset of [{n}]")
            out.append(g)
        return ExtIdeal.from_monomials(n, out, q)
    if ring == SYMMETRIC:
        out = []
        for g in gens:
            g = _int_list(g, "symmetric generator")
            if len(g) != n or any(v < 0 for v in g):
                raise FormatError(f"symmetric generator {g} is not an exponent vector of length {n}")
            out.append(tuple(g))
        d_max = max([n] + [sum(g) for g in out])
        return SymIdeal.from_monomials(n, out, d_max, q)
    raise FormatError("'ring' must be \"exterior\" or \"symmetric\"")


def ideal_to_json(j) -> dict:
    if isinstance(j, ExtIdeal):
        gens = sorted(minimal_generators(j), key=lambda m: (len(m), m))
        return {"n": j.n, "ring": EXTERIOR, "generators": [list(g) for g in gens]}
    if isinstance(j, SymIdeal):
        gens = sorted(j.minimal_generators(), key=lambda m: (sum(m), tuple(-e for e in m)))
        return {"n": j.n, "ring": SYMMETRIC, "generators": [list(g) for g in gens]}
    raise TypeError(f"cannot serialize {type(j).__name__}")


def triangle_to_json(t: dict) -> dict:
    return {f"{i},{r}": v for (i, r), v in sorted(t.items())}
