"""Command-line front end.

Subcommands mirror the library surface: ``kdv``, ``halphen``, ``kn``,
``faulhaber``, ``ebernoulli``, ``bh``, ``lame``, ``phi`` and ``verify``.
Output is deterministic byte-for-byte for identical invocations; formats
are plain text (default), LaTeX, or the JSON wire schema

    {"symbols": [...], "terms": [{"coeff": "p/q", "exp": [...]}]}

used by every polynomial this tool reads or writes.

Exit codes: 0 on success, 1 when a verification fails (the first diff is
printed), 2 on invalid arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import __version__
from . import faulhaber as fb
from . import kdv, lame, numeval, verify
from . import weierstrass as wst
from .render import render


def _add_format(parser: argparse.ArgumentParser, default: str = "text") -> None:
    parser.add_argument(
        "--format",
        choices=("json", "text", "latex"),
        default=default,
        help="output format (default: %(default)s)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="elliptica",
        description="Exact computation of KdV densities, elliptic Faulhaber "
        "polynomials, elliptic Bernoulli numbers and Lame density-of-states "
        "coefficients.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "-o", "--output", default=None, help="write the result to a file instead of stdout"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kdv", help="KdV conserved density T_k (or raw sigma_k)")
    p.add_argument("--k", type=int, required=True, help="index k >= 1")
    p.add_argument(
        "--raw-sigma",
        action="store_true",
        help="emit the raw recurrence density sigma_k instead of T_k",
    )
    _add_format(p)

    p = sub.add_parser("halphen", help="Halphen coefficient B_r^(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("kn", help="period integral of wp^n in the cohomology basis")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--general", action="store_true", help="basis (omega, xi), g1 kept")
    group.add_argument("--reduced", action="store_true", help="basis (omega, eta), g1 = 0 (default)")
    group.add_argument("--lemniscatic", action="store_true", help="closed form at g3 = 0")
    group.add_argument("--equianharmonic", action="store_true", help="closed form at g2 = 0")
    _add_format(p)

    p = sub.add_parser("faulhaber", help="Faulhaber polynomial of order m")
    p.add_argument("--m", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--general", action="store_true", help="elliptic, g1 kept (default)")
    group.add_argument("--weierstrass", action="store_true", help="elliptic, reduced g1 = 0")
    group.add_argument("--jacobi", action="store_true", help="elliptic, reduced g3 = 0")
    group.add_argument("--classical", action="store_true", help="classical polynomial in lambda")
    _add_format(p)

    p = sub.add_parser("ebernoulli", help="elliptic Bernoulli number with even label 2n")
    p.add_argument("--n", type=int, required=True, help="the even label 2n")
    _add_format(p)

    p = sub.add_parser("bh", help="Bernoulli-Hurwitz number with even label 2k")
    p.add_argument("--k", type=int, required=True, help="the even label 2k >= 4")
    _add_format(p)

    p = sub.add_parser("lame", help="density-of-states numerator coefficients a_1..a_K")
    p.add_argument("--n", required=True, help="gap number 1..5, or 'sym' for symbolic n")
    p.add_argument("--order", type=int, required=True, help="number of coefficients K")
    p.add_argument(
        "--spectral-table",
        default=None,
        help="JSON spectral table supplying b_k beyond the built-in range",
    )
    _add_format(p)

    p = sub.add_parser("phi", help="normalised polynomial data for plots")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--g2", type=float, required=True)
    p.add_argument("--g3", type=float, required=True)
    p.add_argument("--xmin", type=float, default=-1.5)
    p.add_argument("--xmax", type=float, default=0.5)
    p.add_argument("--points", type=int, default=101)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("verify", help="run the fixture suites and print a pass/fail matrix")
    p.add_argument("--suite", action="append", default=None, help="suite name (repeatable)")
    p.add_argument("--all", action="store_true", help="run every suite")
    p.add_argument("--list", action="store_true", help="list available suites")

    return parser


def _positive(parser_error, value: int, what: str) -> None:
    if value < 1:
        parser_error(f"{what} must be >= 1")


def cmd_kdv(args, parser) -> str:
    _positive(parser.error, args.k, "--k")
    body = kdv.sigma(args.k) if args.raw_sigma else kdv.density(args.k).body
    return render(body, args.format)


def cmd_halphen(args, parser) -> str:
    if args.n < 0:
        parser.error("--n must be >= 0")
    return render(wst.halphen(args.n, args.r), args.format, n=args.n, r=args.r)


def cmd_kn(args, parser) -> str:
    if args.n < 0:
        parser.error("--n must be >= 0")
    if args.general:
        elem = wst.period_integral_general(args.n)
    elif args.lemniscatic:
        elem = wst.kn_lemniscatic(args.n)
    elif args.equianharmonic:
        elem = wst.kn_equianharmonic(args.n)
    else:
        elem = wst.period_integral_reduced(args.n)
    return render(elem, args.format, n=args.n)


def cmd_faulhaber(args, parser) -> str:
    _positive(parser.error, args.m, "--m")
    if args.classical:
        obj = fb.classical_faulhaber(args.m).poly
    elif args.weierstrass:
        obj = fb.reduced_faulhaber_W(args.m).value
    elif args.jacobi:
        obj = fb.reduced_faulhaber_J(args.m).value
    else:
        obj = fb.elliptic_faulhaber(args.m).value
    return render(obj, args.format, m=args.m)


def cmd_ebernoulli(args, parser) -> str:
    if args.n < 2 or args.n % 2:
        parser.error("--n is the even label 2n and must be an even integer >= 2")
    return render(fb.elliptic_bernoulli(args.n).value, args.format, index=args.n)


def cmd_bh(args, parser) -> str:
    if args.k < 4 or args.k % 2:
        parser.error("--k is the even label 2k and must be an even integer >= 4")
    return render(wst.bernoulli_hurwitz(args.k), args.format, index=args.k)


def cmd_lame(args, parser) -> str:
    _positive(parser.error, args.order, "--order")
    if args.n == "sym":
        if args.spectral_table:
            spectral = lame.load_spectral_table(args.spectral_table)
        else:
            spectral = lame.symbolic_spectral(min(args.order, 4))
    else:
        try:
            n = int(args.n)
        except ValueError:
            parser.error("--n must be an integer or 'sym'")
        if args.spectral_table:
            table = lame.load_spectral_table(args.spectral_table)
            spectral = lame.SpectralPoly(
                n, tuple(b.substitute("n", n) for b in table.coeffs)
            )
        else:
            if not 1 <= n <= 5:
                parser.error("built-in exact spectral polynomials cover n = 1..5; "
                             "pass --spectral-table for other n")
            spectral = lame.spectral_from_radicand(n)
    try:
        numerator = lame.match_numerator(spectral, args.order)
    except lame.MissingSpectralCoefficient as exc:
        parser.error(str(exc))
    if args.format == "json":
        payload = {
            "n": numerator.n if numerator.n is not None else "sym",
            "order": numerator.order,
            "coefficients": [c.to_wire() for c in numerator.coeffs],
        }
        return json.dumps(payload, indent=2, sort_keys=True)
    lines = []
    for k in range(1, numerator.order + 1):
        lines.append(f"a_{k} = " + render(numerator.a(k), args.format))
    return "\n".join(lines)


def cmd_phi(args, parser) -> str:
    if args.m < 2:
        parser.error("--m must be >= 2")
    if args.points < 2:
        parser.error("--points must be >= 2")
    try:
        curve = numeval.real_curve(args.g2, args.g3)
    except numeval.UnsupportedLattice as exc:
        parser.error(str(exc))
    pair = numeval.periods(args.g2, args.g3)
    rows = []
    for i in range(args.points):
        x = args.xmin + (args.xmax - args.xmin) * i / (args.points - 1)
        rows.append(
            (x, numeval.eval_phi(args.m, x, curve, pair), numeval.phi_target(x))
        )
    if args.format == "json":
        payload = {
            "m": args.m,
            "g2": args.g2,
            "g3": args.g3,
            "rows": [{"x": x, "phi": p, "target": t} for x, p, t in rows],
        }
        return json.dumps(payload, indent=2, sort_keys=True)
    lines = ["x,phi,target"]
    for x, p, t in rows:
        lines.append(f"{x!r},{p!r},{t!r}")
    return "\n".join(lines)


def cmd_verify(args, parser) -> tuple:
    if args.list:
        names = ", ".join(sorted(verify.SUITES))
        return f"available suites: {names}", 0
    if args.all or not args.suite:
        names = list(verify.SUITES)
    else:
        try:
            names = [verify.resolve_suite(name) for name in args.suite]
        except KeyError as exc:
            parser.error(str(exc.args[0]))
    lines = []
    first_diff: Optional[str] = None
    total = failed = 0
    for name in names:
        results = verify.SUITES[name]()
        n_fail = sum(1 for r in results if not r.passed)
        total += len(results)
        failed += n_fail
        status = "PASS" if n_fail == 0 else "FAIL"
        lines.append(f"[{status}] {name}: {len(results) - n_fail}/{len(results)} checks passed")
        for r in results:
            if not r.passed and first_diff is None:
                first_diff = f"{name} :: {r.name}\n  {r.detail}"
    lines.append(f"total: {total - failed}/{total} checks passed")
    if first_diff is not None:
        lines.append("first difference:")
        lines.append(first_diff)
        return "\n".join(lines), 1
    return "\n".join(lines), 0


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "kdv": cmd_kdv,
        "halphen": cmd_halphen,
        "kn": cmd_kn,
        "faulhaber": cmd_faulhaber,
        "ebernoulli": cmd_ebernoulli,
        "bh": cmd_bh,
        "lame": cmd_lame,
        "phi": cmd_phi,
    }
    if args.command == "verify":
        text, code = cmd_verify(args, parser)
    else:
        text = handlers[args.command](args, parser)
        code = 0
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)
    return code


def main() -> None:
    sys.exit(run())
