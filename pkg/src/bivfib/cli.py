"""Command-line front end.

    bivfib compute --seq F --n 10
    bivfib eval    --seq F --n -1 --x 1 --y 2
    bivfib series  --seq L --terms 6 --format json
    bivfib verify  --suite all --n-max 16 --format json
    bivfib bench   --n 256,1024 --strategies naive,doubling --format csv

Exit codes: 0 success, 1 verification (or bench cross-check) failure,
2 usage, parse or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import List, Optional, Sequence

from . import engine
from .engine import FIB, LUCAS, SeqParams
from .errors import DomainError, PolySyntaxError
from .identities import DEFAULT_SWEEP, hard_failures, parse_ids, run_suite
from .parsing import parse, parse_rational

STRATEGIES = {
    "naive": engine.fib_naive,
    "matrix_pow": engine.fib_matrix,
    "doubling": lambda n, x, y: engine.fib_doubling(n, x, y)[0],
    "closed_form": engine.fib_closed_form,
}


class UsageError(Exception):
    pass


def _common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("text", "json", "csv"), default=default("text"))
    parser.add_argument("--seed", type=int, default=default(None), help="reserved; unused")
    parser.add_argument("--n-max", type=int, default=default(16), dest="n_max")
    parser.add_argument("--quiet", action="store_true", default=default(False))


def _seq_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seq", choices=("F", "L", "H"), required=True)
    parser.add_argument("--a0", help="H_0 as polynomial text (required for --seq H)")
    parser.add_argument("--a1", help="H_1 as polynomial text (required for --seq H)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bivfib", description="Generalized bivariate Fibonacci polynomials."
    )
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="exact H_n")
    _seq_args(p)
    p.add_argument("--n", type=int, required=True)
    _common(p, suppress=True)

    p = sub.add_parser("eval", help="exact value of H_n at a rational point")
    _seq_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", required=True, help="rational, e.g. 3 or -1/2")
    p.add_argument("--y", required=True)
    _common(p, suppress=True)

    p = sub.add_parser("series", help="coefficients of the generating function")
    _seq_args(p)
    p.add_argument("--terms", type=int, required=True)
    _common(p, suppress=True)

    p = sub.add_parser("verify", help="run the identity catalog")
    p.add_argument("--suite", default="all",
                   help="all, symbolic, numeric or a comma list of identity names")
    p.add_argument("--workers", type=int, default=None)
    _common(p, suppress=True)

    p = sub.add_parser("bench", help="time the F_n computation strategies")
    p.add_argument("--n", required=True, help="comma list of indices")
    p.add_argument("--strategies", default=",".join(STRATEGIES))
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--x", help="evaluate at this x instead of computing polynomials")
    p.add_argument("--y", help="evaluate at this y (with --x)")
    _common(p, suppress=True)
    return parser


def _params(args) -> SeqParams:
    if args.seq == "F":
        return FIB
    if args.seq == "L":
        return LUCAS
    if args.a0 is None or args.a1 is None:
        raise UsageError("--seq H requires --a0 and --a1")
    return SeqParams.of(parse(args.a0), parse(args.a1))


def _emit(args, text_lines: Sequence[str], json_doc, header: Sequence[str], rows) -> None:
    out = sys.stdout
    if args.format == "json":
        json.dump(json_doc, out, indent=None if args.quiet else 2)
        out.write("\n")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        out.write(buf.getvalue())
    else:
        for line in text_lines:
            out.write(line + "\n")


def cmd_compute(args) -> int:
    params = _params(args)
    text = str(engine.h_n(params, args.n))
    _emit(args, [text], {"seq": args.seq, "n": args.n, "poly": text},
          ("seq", "n", "poly"), [(args.seq, args.n, text)])
    return 0


def cmd_eval(args) -> int:
    params = _params(args)
    x, y = parse_rational(args.x), parse_rational(args.y)
    if y == 0 and args.n < 0:
        raise DomainError("negative indices need y != 0")
    value = str(engine.h_n(params, args.n).evaluate_exact({"x": x, "y": y}))
    _emit(args, [value], {"seq": args.seq, "n": args.n, "x": str(x), "y": str(y), "value": value},
          ("seq", "n", "x", "y", "value"), [(args.seq, args.n, x, y, value)])
    return 0


def cmd_series(args) -> int:
    params = _params(args)
    coeffs = [str(c) for c in engine.series_coeffs(params, args.terms)]
    _emit(args, coeffs, coeffs, ("k", "coefficient"), list(enumerate(coeffs)))
    return 0


def cmd_verify(args) -> int:
    try:
        ids = parse_ids(args.suite)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    if not ids:
        raise UsageError("empty identity list")
    reports = run_suite(ids, args.n_max, DEFAULT_SWEEP, workers=args.workers)
    failed = hard_failures(reports)
    survey = sum(len(r.findings) for r in reports)
    lines = [r.summary() for r in reports if not args.quiet or not r.passed]
    lines.append(f"{len(reports) - len(failed)}/{len(reports)} passed"
                 + (f"; {survey} survey findings (not failures)" if survey else ""))
    rows = [(r.id.value, r.n, r.m, r.params, r.status, r.lhs, r.rhs) for r in reports]
    _emit(args, lines, [r.to_json() for r in reports],
          ("id", "n", "m", "params", "status", "lhs", "rhs"), rows)
    return 1 if failed else 0


def _int_list(text: str) -> List[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise UsageError(f"bad index list {text!r}") from None


def cmd_bench(args) -> int:
    ns = _int_list(args.n)
    if not ns or any(n < 1 for n in ns):
        raise DomainError("bench indices must be >= 1")
    names = [s.strip() for s in args.strategies.split(",") if s.strip()]
    unknown = [s for s in names if s not in STRATEGIES]
    if unknown or not names:
        raise UsageError(f"unknown strategy {', '.join(unknown) or '(none)'}; "
                         f"choose from {', '.join(STRATEGIES)}")
    if (args.x is None) != (args.y is None):
        raise UsageError("--x and --y go together")
    if args.x is not None:
        x, y = parse_rational(args.x), parse_rational(args.y)
        x = int(x) if x.denominator == 1 else x
        y = int(y) if y.denominator == 1 else y
    else:
        x, y = engine.X, engine.Y
    records = []
    for n in ns:
        results = {}
        for name in names:
            fn = STRATEGIES[name]
            best = float("inf")
            for _ in range(max(1, args.repeats)):
                t0 = time.perf_counter()
                value = fn(n, x, y)
                best = min(best, time.perf_counter() - t0)
            results[name] = value
            terms = len(value) if isinstance(value, engine.MultiPoly) else 1
            records.append({"strategy": name, "n": n, "wall_time": best, "term_count": terms})
        first = next(iter(results.values()))
        if any(v != first for v in results.values()):
            print(f"strategies disagree at n={n}", file=sys.stderr)
            return 1
    header = ("strategy", "n", "wall_time", "term_count")
    lines = [f"{r['strategy']:<12} n={r['n']:<8} {r['wall_time']:.6f}s terms={r['term_count']}"
             for r in records]
    _emit(args, lines, records, header, [tuple(r[h] for h in header) for r in records])
    return 0


COMMANDS = {
    "compute": cmd_compute,
    "eval": cmd_eval,
    "series": cmd_series,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, DomainError, PolySyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
