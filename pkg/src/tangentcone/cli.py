"""Command line: analyze | resolve | hilbert | verify | sweep.

Exit codes: 0 success or a valid rejection, 1 a verification failure on a
supported input, 2 bad usage.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .pipeline import CSV_COLUMNS, STATUS_FAILED, analyze, csv_row, sweep

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def parse_gens(text):
    try:
        gens = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}")
    if len(gens) != 4 or any(g <= 0 for g in gens):
        raise argparse.ArgumentTypeError("expected four positive integers, e.g. 5,6,7,8")
    return gens


def parse_filter(text):
    key, sep, value = text.partition("=")
    if not sep or key not in CSV_COLUMNS:
        raise argparse.ArgumentTypeError(f"filter must be COLUMN=VALUE with a CSV column, got {text!r}")
    return key, value


def dump(obj, out=None):
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _exit(rec):
    return EXIT_FAILED if rec.status == STATUS_FAILED else EXIT_OK


def _base(rec):
    keys = ("schema_version", "input_generators", "generators", "status", "reason", "message", "case", "variant")
    full = rec.to_json()
    return {k: full[k] for k in keys}


def cmd_analyze(args):
    rec = analyze(args.gens, args.upto)
    dump(rec.to_json(), args.out)
    return _exit(rec)


def cmd_resolve(args):
    rec = analyze(args.gens, args.upto)
    out = _base(rec)
    out["resolution"] = rec.resolution.to_json() if rec.resolution else None
    dump(out, args.out)
    return _exit(rec)


def cmd_hilbert(args):
    rec = analyze(args.gens, args.upto)
    if args.json or rec.hilbert is None:
        out = _base(rec)
        out["hilbert"] = rec.hilbert.to_json() if rec.hilbert else None
        dump(out, args.out)
        return _exit(rec)
    buf = io.StringIO()
    buf.write(f"{'i':>4} {'H_G(i)':>8} {'oracle':>8} equal\n")
    for i, h, o, eq in rec.hilbert.rows():
        buf.write(f"{i:>4} {h:>8} {o:>8} {str(eq).lower()}\n")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return _exit(rec)


def cmd_verify(args):
    rec = analyze(args.gens, args.upto)
    out = _base(rec)
    out["verification"] = rec.verification.to_json() if rec.verification else None
    dump(out, args.out)
    return _exit(rec)


def cmd_sweep(args):
    t0 = time.perf_counter()
    res = sweep(args.alpha_max, args.workers)
    rows = [csv_row(r) for r in res.records]
    for key, value in args.filter or []:
        rows = [r for r in rows if str(r[key]) == value]
    fh = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    try:
        w = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow(row)
            fh.flush()
    finally:
        if fh is not sys.stdout:
            fh.close()
    log = sys.stderr
    print(f"parameter tuples: {res.tuples}; dropped: {dict(sorted(res.dropped.items()))}", file=log)
    print(f"distinct families: {len(res.records)}; rows written: {len(rows)}", file=log)
    for key, n in sorted(res.summary().items()):
        print(f"  {key}: {n}", file=log)
    print(f"elapsed: {time.perf_counter() - t0:.2f}s", file=log)
    failed = any(r.status == STATUS_FAILED for r in res.records)
    return EXIT_FAILED if failed else EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="tangentcone",
        description="Tangent cones of Gorenstein non-complete-intersection monomial curves in A^4.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def single(name, func, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("--gens", type=parse_gens, required=True, help="four generators, e.g. 5,6,7,8")
        s.add_argument("--upto", type=int, default=None, help="Hilbert table bound (default: max |twist| + 4)")
        s.add_argument("--json", action="store_true", help="JSON output (default for all but hilbert)")
        s.add_argument("--out", help="write output to PATH")
        s.set_defaults(func=func)
        return s

    single("analyze", cmd_analyze, "full pipeline report")
    single("resolve", cmd_resolve, "resolution matrices and twists")
    single("hilbert", cmd_hilbert, "Hilbert function against the order-counting oracle")
    single("verify", cmd_verify, "exactness certificate with witness details")

    s = sub.add_parser("sweep", help="enumerate the parametrized families into a CSV dataset")
    s.add_argument("--alpha-max", type=int, required=True, help="bound on each alpha_i (>= 2)")
    s.add_argument("--filter", type=parse_filter, action="append", help="keep rows with COLUMN=VALUE, e.g. case=1a")
    s.add_argument("--out", help="CSV path (default stdout)")
    s.add_argument("--workers", type=int, default=None, help="process count (default: $TANGENTCONE_WORKERS or CPUs)")
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if getattr(args, "upto", None) is not None and args.upto < 0:
        parser.print_usage(sys.stderr)
        print("error: --upto must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "alpha_max", None) is not None and args.alpha_max < 2:
        parser.print_usage(sys.stderr)
        print("error: --alpha-max must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "workers", None) is not None and args.workers < 1:
        print("error: --workers must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
