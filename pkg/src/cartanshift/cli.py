"""Command-line front end.

Exit codes: 0 success, 2 verification failure, 3 genericity failure,
4 input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import verify as vf
from .cartan import cartan_betti_direct
from .errors import CartanShiftError, GenericityFailure
from .exterior import DEGLEX, DEGREVLEX, ExtIdeal
from .formats import FormatError, complex_to_json, dumps, ideal_to_json, read_complex, read_ideal, triangle_to_json
from .gin import gin_exterior, gin_symmetric
from .linalg import DEFAULT_PRIME, is_prime
from .shifting import (DELTA_E, DELTA_S, ShiftOperator, degree_report, is_cm,
                       is_sequentially_cm, iterated_betti)
from .simplicial import f_vector, h_triangle

EXIT_OK = 0
EXIT_FAILED = 2
EXIT_GENERICITY = 3
EXIT_INPUT = 4

ORDER_NAMES = {"revlex": DEGREVLEX, "lex": DEGLEX}


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _check_prime(q: int) -> None:
    if not is_prime(q) or q >= 2**31:
        raise InputError(f"--prime must be a prime below 2^31, got {q}")


def _emit(obj, out: str | None) -> None:
    text = dumps(obj)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gin(a) -> int:
    ideal = read_ideal(_read(a.file), a.prime)
    order = ORDER_NAMES[a.order]
    if isinstance(ideal, ExtIdeal):
        res = gin_exterior(ideal, order, a.trials, a.seed)
    else:
        if order != DEGREVLEX:
            raise InputError("symmetric gin is only available for revlex")
        res = gin_symmetric(ideal, a.trials, a.seed)
    _emit(ideal_to_json(res.ideal), a.out)
    return EXIT_OK


def cmd_cartan_betti(a) -> int:
    ideal = read_ideal(_read(a.file), a.prime)
    if not isinstance(ideal, ExtIdeal):
        raise InputError("Cartan-Betti numbers need an exterior ideal")
    table = cartan_betti_direct(ideal, a.imax, a.seed, a.trials, truncate_above_p=a.truncate_above_p)
    _emit(table.to_json(), a.out)
    return EXIT_OK


def _operator(a) -> ShiftOperator:
    if a.op is not None:
        return ShiftOperator.parse(a.op)
    return DELTA_E if a.order == "revlex" else ShiftOperator.parse("tau-lex")


def cmd_shift(a) -> int:
    c = read_complex(_read(a.file))
    _emit(complex_to_json(_operator(a)(c, a.seed, a.trials, a.prime)), a.out)
    return EXIT_OK


def cmd_invariants(a) -> int:
    c = read_complex(_read(a.file))
    rep = degree_report(c, a.seed, a.trials, a.prime)
    out = {
        "complex": complex_to_json(c),
        "f_vector": f_vector(c),
        "degrees": rep.to_json(),
        "h_triangle": triangle_to_json(h_triangle(c)),
        "iterated_betti_e": triangle_to_json(iterated_betti(c, DELTA_E, a.seed, a.trials, a.prime)),
        "iterated_betti_s": triangle_to_json(iterated_betti(c, DELTA_S, a.seed, a.trials, a.prime)),
        "cohen_macaulay": is_cm(c, a.seed, a.trials, a.prime),
        "sequentially_cohen_macaulay": is_sequentially_cm(c, a.seed, a.trials, a.prime),
    }
    _emit(out, a.out)
    return EXIT_OK


def cmd_verify(a) -> int:
    cfg = vf.RunConfig(prime=a.prime, seed=a.seed, trials=a.trials, i_max=a.imax, n_max=a.n_max,
                       samples=a.samples, suites=vf.parse_suites(a.suite),
                       truncate_above_p=a.truncate_above_p, exhaustive=not a.no_exhaustive)
    try:
        cfg.validate()
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    report = vf.run(cfg)
    _emit(report.to_json(), a.out)
    for name, res in report.suites.items():
        print(f"{name}: {'PASS' if res.passed else 'FAIL'} ({res.samples} samples)", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_explore(a) -> int:
    _emit(vf.explore_report(a.n_max or 5, a.samples, a.seed, a.trials, a.prime), a.out)
    return EXIT_OK


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--out", help="write JSON here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cartanshift",
                                     description="Cartan-Betti numbers, generic initial ideals and algebraic shifting.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gin", help="generic initial ideal of a monomial ideal file")
    p.add_argument("file")
    p.add_argument("--order", choices=sorted(ORDER_NAMES), default="revlex")
    _common(p)
    p.set_defaults(func=cmd_gin)

    p = sub.add_parser("cartan-betti", help="Cartan-Betti table of an exterior ideal file")
    p.add_argument("file")
    p.add_argument("--imax", type=int)
    p.add_argument("--truncate-above-p", action="store_true")
    _common(p)
    p.set_defaults(func=cmd_cartan_betti)

    p = sub.add_parser("shift", help="algebraic shifting of a complex file")
    p.add_argument("file")
    p.add_argument("--op", choices=["e", "tau-lex", "s"])
    p.add_argument("--order", choices=sorted(ORDER_NAMES), default="revlex")
    _common(p)
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("invariants", help="degree functions and iterated Betti numbers of a complex")
    p.add_argument("file")
    _common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", help="run verification suites V1-V12")
    p.add_argument("--suite", default="all", help="'all' or a comma list such as V3,V7")
    p.add_argument("--samples", type=int, default=25)
    p.add_argument("--n-max", type=int)
    p.add_argument("--imax", type=int)
    p.add_argument("--truncate-above-p", action="store_true")
    p.add_argument("--no-exhaustive", action="store_true", help="sample instead of enumerating n <= 4")
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("explore", help="count adeg and iterated Betti comparisons of the two shiftings")
    p.add_argument("--samples", type=int, default=25)
    p.add_argument("--n-max", type=int)
    _common(p)
    p.set_defaults(func=cmd_explore)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        if a.command != "verify":
            _check_prime(a.prime)
        return a.func(a)
    except GenericityFailure as exc:
        print(f"genericity failure: {exc}", file=sys.stderr)
        return EXIT_GENERICITY
    except (InputError, FormatError, ValueError, CartanShiftError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
