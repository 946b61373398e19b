"""Command-line front end.

Every subcommand prints one value per line in a documented order, so the
output is scriptable; ``--json`` (after the subcommand) wraps the same
values, as strings, in a single JSON object.  Exit codes: 0 success,
1 internal invariant violation, 2 argument error (one-line diagnostic).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .congruences import is_prime_wilson, prop15_residue, valuation_bound
from .parity import (
    build_tapestry,
    column_period,
    parity_even_d,
    pbm_bytes,
    row_period,
)
from .polynomials import (
    eval_definition,
    p_polynomial,
    real_roots,
    stirling_function_poly,
    v_number,
)
from .stirling import stirling1_signed, stirling2


class _OneLineParser(argparse.ArgumentParser):
    """argparse parser that emits a single-line diagnostic on bad arguments."""

    def error(self, message):
        self.exit(2, f"error: {message}\n")


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational 'a/b' or integer: {text!r}")


def _cmd_stirling(args):
    return {"value": str(stirling2(args.m, args.n))}


def _cmd_stirling1(args):
    return {"value": str(stirling1_signed(args.n, args.k))}


def _cmd_poly(args):
    return {
        "p_polynomial": p_polynomial(args.m, args.n).serialize(),
        "stirling_function": stirling_function_poly(args.m, args.n).serialize(),
    }


def _cmd_eval(args):
    return {"value": str(eval_definition(args.m, args.n, args.z))}


def _cmd_roots(args):
    classification = real_roots(args.m, args.n)
    return {
        "kind": classification.kind.value,
        "simple_certified": "true" if classification.simple_certified else "false",
    }


def _cmd_v(args):
    return {"value": str(v_number(args.m, args.n))}


def _cmd_parity(args):
    d = args.m - args.n
    if d >= 0 and d % 2 == 0:
        return {"parity": str(parity_even_d(args.m, args.n)), "method": "Kummer"}
    return {"parity": str(stirling2(args.m, args.n) % 2), "method": "table"}


def _cmd_period(args):
    if args.row is not None:
        return {"period": str(row_period(args.row))}
    return {"period": str(column_period(args.col))}


def _cmd_gasket(args):
    data = pbm_bytes(build_tapestry(args.n))
    with open(args.out, "wb") as fh:
        fh.write(data)
    return {}


def _cmd_valuation(args):
    report = valuation_bound(args.p, args.m, args.n)
    return {"bound": str(report.bound), "actual": str(report.actual)}


def _cmd_wilson(args):
    report = is_prime_wilson(args.p, args.nmax)
    return {
        "p": str(report.p),
        "checked_n": ",".join(str(n) for n in report.checked_n),
        "all_passed": "true" if report.all_passed else "false",
        "first_failure": "none" if report.first_failure is None else str(report.first_failure),
    }


def _cmd_residue(args):
    residue = prop15_residue(args.p, args.n, args.k)
    expected = 1
    for x in range(2, args.k):
        expected = expected * x % args.p
    return {"residue": str(residue), "expected": str(expected)}


def build_parser() -> argparse.ArgumentParser:
    common = _OneLineParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="emit one JSON object instead of lines"
    )

    parser = _OneLineParser(
        prog="stirlingtools",
        description="Exact Stirling numbers, their polynomial extensions, "
        "parity structure, and Wilson-type primality checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stirling", parents=[common], help="S(m, n)")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_stirling)

    p = sub.add_parser("stirling1", parents=[common], help="signed s(n, k)")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(handler=_cmd_stirling1)

    p = sub.add_parser(
        "poly",
        parents=[common],
        help="ascending coefficients of P(z) and of S(m, n, z)",
    )
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_poly)

    p = sub.add_parser("eval", parents=[common], help="exact S(m, n, z) at rational z")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("z", type=_parse_rational, help="rational, 'a/b' or integer")
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser(
        "roots", parents=[common], help="real solutions of S(m, n, z) = S(m, n)"
    )
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_roots)

    p = sub.add_parser("v", parents=[common], help="minimum of |S(m, n, z)| over real z")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_v)

    p = sub.add_parser("parity", parents=[common], help="S(m, n) mod 2 with method tag")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_parity)

    p = sub.add_parser("period", parents=[common], help="tapestry row/column period")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--row", type=int)
    group.add_argument("--col", type=int)
    p.set_defaults(handler=_cmd_period)

    p = sub.add_parser("gasket", parents=[common], help="write tapestry P_N as PBM")
    p.add_argument("n", type=int, metavar="N")
    p.add_argument("--out", required=True, help="output PBM path")
    p.set_defaults(handler=_cmd_gasket)

    p = sub.add_parser(
        "valuation", parents=[common], help="p-adic bound and actual for odd d"
    )
    p.add_argument("p", type=int)
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_valuation)

    p = sub.add_parser("wilson", parents=[common], help="generalized Wilson report")
    p.add_argument("p", type=int)
    p.add_argument("--nmax", type=int, default=1)
    p.set_defaults(handler=_cmd_wilson)

    p = sub.add_parser(
        "residue", parents=[common], help="S(n(p-1), p-k) mod p and expected (k-1)!"
    )
    p.add_argument("p", type=int)
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(handler=_cmd_residue)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(payload))
    else:
        for value in payload.values():
            print(value)
    return 0


if __name__ == "__main__":
    sys.exit(main())
