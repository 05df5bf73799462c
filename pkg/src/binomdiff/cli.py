"""Command-line front end.

Subcommands:
  interval  one interval for observed counts
  coverage  exact coverage rate / expected length at a (p1, p2) point
  table     coverage/length sweep over the built-in scenario grids
  example   five-method comparison for the disease-transmission counts
            (x1=9, n1=29, x2=5, n2=31)

All numeric output is full-precision (round-trippable) in csv/json and
rounded to 3 decimals in plain text.  Identical flags and seed give
byte-identical output.
"""

import argparse
import csv
import io
import json
import sys

from .coverage import Scenario, exact_coverage, table_sweep
from .distributions import Counts, McConfig
from .intervals import Method, compute

TABLE_POINTS = [(0.1, 0.1), (0.1, 0.7), (0.3, 0.3), (0.3, 0.7), (0.5, 0.5)]
TABLE_N = {"2": 10, "3": 20}
EXAMPLE_COUNTS = (9, 29, 5, 31)
ALL_METHODS = list(Method)


def _fmt_text(v):
    if isinstance(v, float):
        return f"{v:.3f}"
    return str(v)


def _emit_records(records, fmt, out, fields):
    if fmt == "json":
        for r in records:
            out.write(json.dumps({k: r[k] for k in fields}) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(fields)
        for r in records:
            w.writerow([repr(r[k]) if isinstance(r[k], float) else r[k]
                        for k in fields])
    else:
        for r in records:
            out.write(" ".join(f"{k}={_fmt_text(r[k])}" for k in fields) + "\n")


def _counts(parser, x, n, label):
    try:
        return Counts(x, n)
    except ValueError as exc:
        parser.error(f"invalid {label}: {exc}")


def _interval_record(method, c1, c2, args, cfg):
    stream = c1.x * (c2.n + 1) + c2.x
    e = compute(method, c1, c2, args.level, cfg, stream, clip=args.clip)
    rec = {"method": method.value, "x1": c1.x, "n1": c1.n, "x2": c2.x, "n2": c2.n,
           "level": args.level, "seed": cfg.seed, "samples": cfg.samples,
           "lower": e.lower, "upper": e.upper, "length": e.length}
    fields = ["method", "x1", "n1", "x2", "n2", "level", "lower", "upper", "length"]
    if method is Method.MATCH:
        rec["fallback"] = e.fallback
        fields.append("fallback")
    return rec, fields


def cmd_interval(parser, args, out):
    c1 = _counts(parser, args.x1, args.n1, "group 1 counts")
    c2 = _counts(parser, args.x2, args.n2, "group 2 counts")
    cfg = McConfig(seed=args.seed, samples=args.samples)
    method = Method.from_cli(args.method)
    rec, fields = _interval_record(method, c1, c2, args, cfg)
    _emit_records([rec], args.format, out, fields)
    return 0


def cmd_coverage(parser, args, out):
    try:
        s = Scenario(args.n1, args.n2, args.p1, args.p2, args.level)
    except ValueError as exc:
        parser.error(str(exc))
    cfg = McConfig(seed=args.seed, samples=args.samples)
    r = exact_coverage(Method.from_cli(args.method), s, cfg,
                       workers=args.workers, clip=not args.no_clip)
    rec = {"method": args.method, "n1": s.n1, "n2": s.n2, "p1": s.p1, "p2": s.p2,
           "level": s.level, "seed": cfg.seed, "samples": cfg.samples,
           "cr": r.cr, "le": r.le, "cells": r.cells,
           "fallback_mass": r.fallback_mass}
    fields = ["method", "n1", "n2", "p1", "p2", "level", "cr", "le",
              "cells", "fallback_mass"]
    _emit_records([rec], args.format, out, fields)
    return 0


def cmd_table(parser, args, out):
    n = TABLE_N[args.which]
    rows = [Scenario(n, n, p1, p2, 0.95) for p1, p2 in TABLE_POINTS]
    cfg = McConfig(seed=args.seed, samples=args.samples)
    records = table_sweep(rows, ALL_METHODS, cfg, workers=args.workers,
                          clip=not args.no_clip)
    _emit_records(records, "csv", out, ["p1", "p2", "method", "cr", "le"])
    return 0


def cmd_example(parser, args, out):
    x1, n1, x2, n2 = EXAMPLE_COUNTS
    c1, c2 = Counts(x1, n1), Counts(x2, n2)
    cfg = McConfig(seed=args.seed, samples=args.samples)
    stream = x1 * (n2 + 1) + x2
    records = []
    for m in ALL_METHODS:
        e = compute(m, c1, c2, 0.95, cfg, stream)
        records.append({"method": m.value, "lower": e.lower, "upper": e.upper,
                        "length": e.length})
    _emit_records(records, args.format, out, ["method", "lower", "upper", "length"])
    return 0


def _add_common(p):
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=200_000)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="binomdiff",
        description="Intervals for the difference of two binomial proportions, "
                    "and their exact coverage.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("interval", help="compute one interval for observed counts")
    p.add_argument("--method", required=True,
                   choices=[m.value for m in Method])
    p.add_argument("--x1", type=int, required=True)
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--x2", type=int, required=True)
    p.add_argument("--n2", type=int, required=True)
    p.add_argument("--level", type=float, default=0.95)
    p.add_argument("--clip", action="store_true",
                   help="clip Wald-form endpoints to [-1, 1]")
    _add_common(p)
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("coverage", help="exact coverage at a (p1, p2) point")
    p.add_argument("--method", required=True,
                   choices=[m.value for m in Method])
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--n2", type=int, required=True)
    p.add_argument("--p1", type=float, required=True)
    p.add_argument("--p2", type=float, required=True)
    p.add_argument("--level", type=float, default=0.95)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-clip", action="store_true",
                   help="use raw (unclipped) Wald-form endpoints in the sums")
    _add_common(p)
    p.set_defaults(func=cmd_coverage)

    p = sub.add_parser("table", help="coverage sweep over the built-in grids")
    p.add_argument("--which", choices=["2", "3"], required=True,
                   help="2: n1=n2=10; 3: n1=n2=20")
    p.add_argument("--out", default="-", help="output CSV path ('-' = stdout)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=200_000)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-clip", action="store_true",
                   help="use raw (unclipped) Wald-form endpoints in the sums")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("example", help="five-method worked example")
    p.add_argument("--out", default="-", help="output path ('-' = stdout)")
    _add_common(p)
    p.set_defaults(func=cmd_example)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    out_path = getattr(args, "out", "-")
    if out_path != "-":
        try:
            fh = open(out_path, "w", encoding="utf-8", newline="")
        except OSError as exc:
            parser.exit(2, f"cannot open output path: {exc}\n")
        with fh:
            return args.func(parser, args, fh)
    buf = io.StringIO()
    rc = args.func(parser, args, buf)
    sys.stdout.write(buf.getvalue())
    return rc


if __name__ == "__main__":
    sys.exit(main())
