"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 internal
error. Code 3 covers broken arithmetic invariants as well as the term ceiling.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .algebra import AlgebraElement
from .indexsets import parse_index_set
from .laurent import LaurentPoly, NotDivisibleError, render as render_laurent
from .minors import quantum_minor
from .parsing import ParseError, parse_expression, parse_minor
from .poisson import bracket, bracket_minors, classical_minor, normalize_variant, semiclassical_bracket
from .relations import (
    ALL_KINDS,
    GENERATOR_KINDS,
    ResourceLimitError,
    gen_generator_minor_relation,
    gen_pair_relation,
    normalize_kind,
    quasicommutation_condition,
    sweep_verify,
    verify_relation,
)
from .rform import r_factored, r_minor_closed, r_minor_oracle, render_factored

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _laurent_json(p: LaurentPoly) -> dict:
    return {str(e): c for e, c in p.items()}


def _element_json(a: AlgebraElement) -> dict:
    return {
        "n": a.n,
        "terms": [{"word": [list(g) for g in w], "coeff": _laurent_json(c)} for w, c in a.items()],
        "text": str(a),
    }


def _emit(args, text: str, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _minor_arg(text: str, n: int):
    try:
        return parse_minor(text, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _set_arg(text: Optional[str], n: int, name: str):
    if text is None:
        raise UsageError(f"--{name} is required")
    try:
        return parse_index_set(text, n)
    except ValueError as exc:
        raise UsageError(f"--{name}: {exc}") from None


# -- subcommands -------------------------------------------------------------


def cmd_normalform(args) -> int:
    try:
        value = parse_expression(args.expression, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, str(value), _element_json(value))
    return EXIT_OK


def cmd_rform(args) -> int:
    I, J = _minor_arg(args.left, args.n)
    M, N = _minor_arg(args.right, args.n)
    if args.oracle:
        value = r_minor_oracle(I, J, M, N, args.n)
        method = "oracle"
    else:
        value = r_minor_closed(I, J, M, N)
        method = "closed"
    text = render_laurent(value)
    if args.factored and not args.oracle:
        text = f"{render_factored(I, J, M, N)} = {text}"
    factored = r_factored(I, J, M, N)
    payload = {
        "method": method,
        "left": {"rows": list(I), "cols": list(J)},
        "right": {"rows": list(M), "cols": list(N)},
        "value": _laurent_json(value),
        "text": render_laurent(value),
    }
    if factored is not None and not args.oracle:
        payload["factored"] = {
            "q": factored["q"],
            "qhat": factored["qhat"],
            "neg_q": factored["negq"],
            "xi": _laurent_json(factored["xi"]),
            "text": render_factored(I, J, M, N),
        }
    _emit(args, text, payload)
    return EXIT_OK


def cmd_relation(args) -> int:
    try:
        kind = normalize_kind(args.kind)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    n = args.n
    I = _set_arg(args.I, n, "I")
    J = _set_arg(args.J, n, "J")
    try:
        if kind in GENERATOR_KINDS:
            if args.i is None or args.j is None:
                raise UsageError(f"{kind} needs --i and --j")
            rel = gen_generator_minor_relation(kind, args.i, args.j, I, J, n)
        else:
            M = _set_arg(args.M, n, "M")
            N = _set_arg(args.N, n, "N")
            rel = gen_pair_relation(kind, I, J, M, N, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    status = EXIT_OK
    payload = rel.to_json()
    text = rel.render_text()
    if args.check:
        ok = verify_relation(rel)
        payload["verified"] = ok
        text += "\n" + ("VERIFIED" if ok else "FAILED")
        status = EXIT_OK if ok else EXIT_VERIFY
    _emit(args, text, payload)
    return status


def cmd_quasi(args) -> int:
    n = args.n
    I, J, M, N = (_set_arg(getattr(args, k), n, k) for k in "IJMN")
    try:
        found = quasicommutation_condition(I, J, M, N)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"exponent": None, "condition": None}
    status = EXIT_OK
    if found is None:
        text = "no conclusion"
    else:
        m, why = found
        payload = {"exponent": m, "condition": why}
        text = f"m = {m} ({why})"
        if args.check:
            a, b = quantum_minor(I, J, n), quantum_minor(M, N, n)
            ok = (a * b - (b * a).scale(LaurentPoly.monomial(m))).is_zero()
            payload["verified"] = ok
            text += "\n" + ("VERIFIED" if ok else "FAILED")
            status = EXIT_OK if ok else EXIT_VERIFY
    _emit(args, text, payload)
    return status


def cmd_verify(args) -> int:
    if args.kinds.strip().lower() == "all":
        kinds = list(ALL_KINDS)
    else:
        try:
            kinds = [normalize_kind(k) for k in args.kinds.split(",") if k.strip()]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        report = sweep_verify(args.n, args.max_size, kinds, seed=args.seed, samples=args.samples, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, report.render_text(), report.to_json())
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_poisson(args) -> int:
    I, J = _minor_arg(args.left, args.n)
    M, N = _minor_arg(args.right, args.n)
    if args.oracle:
        value = semiclassical_bracket(I, J, M, N, args.n)
        method = "semiclassical"
    elif args.variant == "leibniz":
        value = bracket(classical_minor(I, J), classical_minor(M, N))
        method = "leibniz"
    else:
        try:
            method = normalize_variant(args.variant)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        value = bracket_minors(method, I, J, M, N)
    payload = {
        "method": method,
        "terms": [
            {"monomial": [[i, j, e] for (i, j), e in mono], "coeff": c} for mono, c in sorted(value.terms.items())
        ],
        "text": value.render(),
    }
    _emit(args, value.render(), payload)
    return EXIT_OK


# -- wiring ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qmatrix", description="Exact computations in the quantum matrix algebra O_q(M_n).")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(p, need_n=True):
        if need_n:
            p.add_argument("--n", type=int, required=True, help="ambient matrix size")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("normalform", help="straighten an expression to PBW normal form")
    p.add_argument("expression")
    common(p)
    p.set_defaults(func=cmd_normalform)

    p = sub.add_parser("rform", help="value of r on a pair of minors")
    p.add_argument("--left", required=True, metavar="I|J")
    p.add_argument("--right", required=True, metavar="M|N")
    p.add_argument("--oracle", action="store_true", help="use the brute-force recursion")
    p.add_argument("--factored", action="store_true", help="also print the factored closed form")
    common(p)
    p.set_defaults(func=cmd_rform)

    p = sub.add_parser("relation", help="emit a commutation relation")
    p.add_argument("--kind", required=True, help="one of " + ", ".join(k.replace("_", ".") for k in ALL_KINDS))
    for name in "IJMN":
        p.add_argument(f"--{name}", dest=name, metavar="SET")
    p.add_argument("--i", type=int, dest="i")
    p.add_argument("--j", type=int, dest="j")
    p.add_argument("--check", action="store_true", help="expand and verify the identity")
    common(p)
    p.set_defaults(func=cmd_relation)

    p = sub.add_parser("quasi", help="quasicommutation exponent, when a sufficient condition applies")
    for name in "IJMN":
        p.add_argument(f"--{name}", dest=name, metavar="SET", required=True)
    p.add_argument("--check", action="store_true", help="confirm by direct commutation")
    common(p)
    p.set_defaults(func=cmd_quasi)

    p = sub.add_parser("verify", help="sweep and verify generated relations")
    p.add_argument("--max-size", type=int, default=2)
    p.add_argument("--kinds", default="all", help="comma-separated kinds or 'all'")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--samples", type=int, default=None, help="sample this many inputs per kind")
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("poisson", help="Poisson bracket of two classical minors")
    p.add_argument("--left", required=True, metavar="I|J")
    p.add_argument("--right", required=True, metavar="M|N")
    p.add_argument("--variant", default="7.9", help="7.6, 7.8, 7.9 (or T7_3, T7_4, C7_5) or leibniz")
    p.add_argument("--oracle", action="store_true", help="use the semiclassical limit of the quantum commutator")
    common(p)
    p.set_defaults(func=cmd_poisson)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "n", 1) < 1:
        print("qmatrix: error: --n must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ParseError) as exc:
        print(f"qmatrix: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotDivisibleError, AssertionError, ResourceLimitError) as exc:
        print(f"qmatrix: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
