"""Command-line front end.

Exit statuses: 0 success, 1 verification or invariant failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .analytic import SeriesConfig, euler_series, generating_function_check, minimal_terms
from .errors import ConfigurationError, DomainError, InvariantError, ParameterError
from .exactfield import parse_rational, qrat_eval
from .padic import MEASURES, PrimeContext, convergence_certificate
from .qeuler import euler_q_polynomial, euler_q_recurrence
from .tables import FORMATS, KINDS, build_table, render
from .verify import SUITES, run_suite, summarize

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational(text):
    try:
        return parse_rational(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _complex_pair(text):
    try:
        re, im = (float(s) for s in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}") from exc
    return complex(re, im)


def _int_list(text):
    try:
        return tuple(int(s) for s in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_table(args):
    if args.kind == "carlitz-h" and args.u is None:
        raise UsageError("--u is required for --kind carlitz-h")
    if args.kind != "carlitz-h" and args.u is not None:
        raise UsageError("--u only applies to --kind carlitz-h")
    values = build_table(args.kind, args.n_max, args.u)
    _emit(render(args.kind, values, args.format, args.u), args.out)
    return EXIT_OK


def _format_complex(z):
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real!r} {sign} {abs(z.imag)!r}i"


def cmd_eval(args):
    if args.q_complex is not None:
        q = args.q_complex
        if not abs(q) < 1:
            raise DomainError(f"|q| must be below 1, got {abs(q)}")
        tol = args.tol if args.tol is not None else math.inf
        terms = args.terms or minimal_terms(abs(q), args.n, args.tol or 1e-12)
        cfg = SeriesConfig(q, max(terms, 1), tol)
        value, tail = euler_series(args.n, cfg, args.x)
        print(f"{_format_complex(value)} ± {tail:.3e}")
        return EXIT_OK
    table = euler_q_recurrence(args.n)
    value = euler_q_polynomial(args.n, table).substitute(args.x) if args.x else table[args.n]
    print(qrat_eval(value, args.q_exact))
    return EXIT_OK


def cmd_verify(args):
    reports = run_suite(args.suite, n_max=args.n_max, m_max=args.m_max, n_list=args.n_list)
    payload = {"reports": [r.to_json() for r in reports], "summary": summarize(reports)}
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_padic(args):
    ctx = PrimeContext(args.p, args.q, args.n_max_level)
    cert = convergence_certificate(ctx, args.moment, args.shift, measure=args.measure)
    _emit(json.dumps(cert.to_json(), indent=2) + "\n", args.out)
    return EXIT_OK if cert.passed else EXIT_FAIL


def cmd_gfcheck(args):
    cfg = SeriesConfig(args.q_complex, args.terms)
    report = generating_function_check(cfg, args.t, args.n_max)
    _emit(json.dumps(report.to_json(), indent=2) + "\n", args.out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qeulerlab", description="Exact q-Euler numbers, identity checks and p-adic certificates."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="tabulate E_{n,q}, beta_{n,q} or H_n(u;q)")
    p.add_argument("--kind", required=True, choices=sorted(KINDS))
    p.add_argument("--n-max", required=True, type=int)
    p.add_argument("--u", type=_rational, help="Carlitz parameter, as P/Q")
    p.add_argument("--format", default="text", choices=FORMATS)
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("eval", help="evaluate E_{n,q} (or E_{n,q}(x)) at one q")
    p.add_argument("--n", required=True, type=int)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--q-exact", type=_rational, help="exact rational q, as P/Q")
    g.add_argument("--q-complex", type=_complex_pair, help="complex q with |q| < 1, as RE,IM")
    p.add_argument("--terms", type=int, help="series truncation for --q-complex")
    p.add_argument("--tol", type=float, help="required tail bound for --q-complex")
    p.add_argument("--x", type=int, default=0)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="run exact identity suites")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--n-max", type=int)
    p.add_argument("--m-max", type=int)
    p.add_argument("--n-list", type=_int_list, help="explicit n values, comma separated")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("padic", help="p-adic convergence certificate for a Riemann sum")
    p.add_argument("--p", required=True, type=int)
    p.add_argument("--q", required=True, type=_rational)
    p.add_argument("--n-max-level", type=int, default=4)
    p.add_argument("--moment", required=True, type=int)
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--measure", default="fermionic", choices=MEASURES)
    p.add_argument("--out")
    p.set_defaults(func=cmd_padic)

    p = sub.add_parser("gfcheck", help="float check of the exponential generating function")
    p.add_argument("--q-complex", required=True, type=_complex_pair)
    p.add_argument("--terms", type=int, default=300)
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--t", type=_complex_pair, action="append", required=True,
                   help="evaluation point RE,IM; repeatable")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gfcheck)
    return parser


def _nonnegative(args):
    for name in ("n_max", "m_max", "n", "moment", "shift", "x", "terms", "n_max_level"):
        v = getattr(args, name, None)
        if v is not None and v < 0:
            raise UsageError(f"--{name.replace('_', '-')} must be nonnegative")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _nonnegative(args)
        return args.func(args)
    except (UsageError, DomainError, ParameterError, ConfigurationError) as exc:
        print(f"qeulerlab {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantError as exc:
        print(f"qeulerlab {args.command}: internal invariant failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
