"""Command-line front end.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 pass, 1 table
mismatch, 2 bad input, 3 precision exhausted, 4 truncation precondition.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import harness
from .coefficients import KummerParams, TruncationSpec, a_coefficients, b_coefficients, optimal_truncation
from .errors import BadInputError, WeberError
from .exact_series import G_CEILING, dump_g_json
from .precision import Kind


def _number(text: str) -> Fraction:
    try:
        return harness.parse_number(text)
    except BadInputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _values(text: str) -> list[Fraction]:
    """``1,2,5`` or ``lo:hi[:step]`` (inclusive); empty string gives no values."""
    text = text.strip()
    if not text:
        return []
    if ":" in text:
        parts = [_number(p) for p in text.split(":")]
        if len(parts) not in (2, 3):
            raise argparse.ArgumentTypeError("range must be lo:hi or lo:hi:step")
        lo, hi = parts[0], parts[1]
        step = parts[2] if len(parts) == 3 else Fraction(1)
        if step <= 0:
            raise argparse.ArgumentTypeError("range step must be positive")
        out = []
        v = lo
        while v <= hi:
            out.append(v)
            v += step
        return out
    return [_number(p) for p in text.split(",") if p.strip()]


def _common(p: argparse.ArgumentParser, point: bool = True) -> None:
    if point:
        p.add_argument("--a", type=_number, default=Fraction(1))
        p.add_argument("--x", type=_number, default=Fraction(6))
        p.add_argument("--M", type=int, default=6)
        p.add_argument("--kind", choices=["even", "odd"], default="even")
    p.add_argument("--digits", type=int, default=50)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--strict-digits", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stokesweber",
        description="Exponentially improved asymptotics of the even/odd Weber-type solutions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="A_j and B_j for given a and alpha (or x)")
    p.add_argument("--a", type=_number, default=Fraction(1, 4))
    p.add_argument("--alpha", type=_number, default=None)
    p.add_argument("--x", type=_number, default=None, help="derive alpha from optimal truncation")
    p.add_argument("--M", type=int, default=6, help="number of coefficients")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--dump-g", action="store_true", help="emit the G polynomials as JSON instead")
    p.add_argument("--scaled", action="store_true", help="with --dump-g: 6^k G_k, even k only")

    for n in (1, 2, 3):
        p = sub.add_parser(f"table{n}", help=f"reproduce table {n}")
        _common(p, point=False)

    p = sub.add_parser("eval", help="evaluate one point")
    _common(p)

    p = sub.add_parser("sweep", help="|W - E| against M or x")
    _common(p)
    p.add_argument("--param", choices=["M", "x"], required=True)
    p.add_argument("--values", type=_values, required=True, help="'1,2,3' or 'lo:hi[:step]'")

    p = sub.add_parser("dump-g", help="G polynomials as JSON")
    p.add_argument("--max-index", type=int, default=10)
    p.add_argument("--scaled", action="store_true")
    return parser


def _config(args) -> harness.RunConfig:
    return harness.RunConfig(
        a=getattr(args, "a", Fraction(1)),
        x=getattr(args, "x", Fraction(6)),
        M=getattr(args, "M", 6),
        kind=Kind.parse(getattr(args, "kind", "even")),
        digits=args.digits,
        fmt=args.format,
        strict_digits=args.strict_digits,
    )


def _coeffs(args, out) -> int:
    if args.dump_g:
        out.write(dump_g_json(min(max(2 * (args.M - 1), 0), G_CEILING), args.scaled) + "\n")
        return 0
    if args.alpha is not None:
        trunc = TruncationSpec(1, args.alpha)
    elif args.x is not None:
        trunc = optimal_truncation(args.a, args.x)
    else:
        raise BadInputError("coeffs needs --alpha or --x")
    p = KummerParams.from_weber(Kind.EVEN, args.a)
    A = a_coefficients(p, args.M)
    B = b_coefficients(p, trunc, args.M)
    rows = [
        {
            "j": j,
            "A": harness.format_number(av, 16),
            "B": harness.format_number(bv, 16),
            "A_exact": f"{av.numerator}/{av.denominator}",
            "B_exact": f"{bv.numerator}/{bv.denominator}",
        }
        for j, (av, bv) in enumerate(zip(A, B))
    ]
    out.write(harness.render(rows, args.format))
    return 0


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.command == "coeffs":
            return _coeffs(args, out)
        if args.command == "dump-g":
            out.write(dump_g_json(args.max_index, args.scaled) + "\n")
            return 0
        config = _config(args)
        if args.command.startswith("table"):
            report = harness.run_table(int(args.command[-1]), config)
            out.write(harness.render(harness.report_rows(report), config.fmt, harness.CELL_HEADER))
            for cell in report.failures:
                err.write(
                    f"FAIL table {cell.table} row {cell.row} column {cell.column}: "
                    f"expected {cell.expected}, got {cell.got}\n"
                )
            return 0 if report.passed else 1
        if args.command == "eval":
            out.write(harness.render(harness.eval_point(config), config.fmt))
            return 0
        if args.command == "sweep":
            rows = harness.sweep(args.param, args.values, config)
            header = [args.param, "W", "E", "abs_diff", "rel_diff", "error_estimate"]
            out.write(harness.render(rows, config.fmt, header))
            return 0
    except WeberError as exc:
        err.write(f"error: {exc}\n")
        return exc.exit_code
    return 2


if __name__ == "__main__":
    sys.exit(main())
