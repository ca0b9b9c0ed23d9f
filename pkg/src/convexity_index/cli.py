"""Command-line front end.

Exit codes: 0 success or "holds", 1 mathematical false (not a member,
violation found), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from . import bounds, fractal, oracle, partitions, regions
from .errors import ConvexityError, ParseError
from .index import diameter, largest_gap, schneider_index, sum_index
from .sets import CompactSet1D, as_rational, load_set, save_set, sum_all

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class Printer:
    def __init__(self, decimal: int | None, out=None):
        self.decimal = decimal
        self.out = out or sys.stdout

    def num(self, x) -> str:
        if isinstance(x, float) and math.isinf(x):
            return "inf"
        if isinstance(x, int):
            return str(x)
        x = Fraction(x)
        if self.decimal is None:
            return str(x)
        with localcontext() as ctx:
            ctx.prec = self.decimal + len(str(abs(x.numerator // x.denominator))) + 10
            d = Decimal(x.numerator) / Decimal(x.denominator)
            return str(d.quantize(Decimal(1).scaleb(-self.decimal)))

    def line(self, text: str = "") -> None:
        print(text, file=self.out)

    def set_json(self, a: CompactSet1D) -> None:
        if self.decimal is None:
            self.line(a.dumps())
        else:
            self.line(json.dumps({"intervals": [[self.num(lo), self.num(hi)] for lo, hi in a.intervals]}))


def _rat(text: str) -> Fraction:
    try:
        return as_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _load_sets(path: str) -> list[CompactSet1D]:
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if isinstance(obj, dict) and "sets" in obj:
        obj = obj["sets"]
    if not isinstance(obj, list):
        raise ParseError(f'{path}: expected a list of sets or an object with a "sets" field')
    out = []
    for i, item in enumerate(obj):
        try:
            out.append(CompactSet1D.from_json(item))
        except ConvexityError as exc:
            raise type(exc)(f"{path}: sets[{i}]: {exc}") from None
    return out


# ---------------------------------------------------------------------------
# subcommands


def cmd_index(args, p: Printer) -> int:
    a = load_set(args.file)
    p.line(f"c={p.num(schneider_index(a))} G={p.num(largest_gap(a))} diam={p.num(diameter(a))}")
    return EXIT_OK


def cmd_sum(args, p: Printer) -> int:
    total = sum_all([load_set(f) for f in args.files])
    if args.output:
        save_set(total, args.output)
    else:
        p.set_json(total)
    return EXIT_OK


def cmd_lower_bound(args, p: Printer) -> int:
    p.line(p.num(bounds.lower_bound_L(args.c1, args.c2)))
    return EXIT_OK


def cmd_witness(args, p: Printer) -> int:
    if args.c12 is None:
        a, b = bounds.tight_witness_pair(args.c1, args.c2)
    else:
        mem = regions.schneider_membership_S12(args.c1, args.c2, args.c12)
        if not mem:
            p.line(f"not a member: {mem.reason}")
            return EXIT_FALSE
        a, b = regions.schneider_witness_S12(args.c1, args.c2, args.c12)
    p.set_json(a)
    p.set_json(b)
    p.line(f"c1={p.num(schneider_index(a))} c2={p.num(schneider_index(b))} c12={p.num(sum_index([a, b]))}")
    return EXIT_OK


def cmd_kbound(args, p: Printer) -> int:
    p.line(p.num(bounds.ksum_candidate_bound(args.c)))
    return EXIT_OK


def cmd_cstar(args, p: Printer) -> int:
    p.line(p.num(bounds.induced_index_cstar(args.c)))
    return EXIT_OK


def cmd_gap_bound(args, p: Printer) -> int:
    p.line(p.num(bounds.gap_sum_upper_bound(args.g)))
    return EXIT_OK


def cmd_region(args, p: Printer) -> int:
    if args.region == "s12":
        mem = regions.schneider_membership_S12(args.c1, args.c2, args.c12)
        if mem:
            p.line(f"member (piece {mem.piece.value})")
            return EXIT_OK
        p.line(f"not a member: {mem.reason}")
        return EXIT_FALSE
    ok = regions.lyusternik_membership_L2(args.n, args.a, args.b, args.c)
    p.line("member" if ok else f"not a member: c >= (a^(1/{args.n}) + b^(1/{args.n}))^{args.n} fails")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_partition(args, p: Printer) -> int:
    system = partitions.SetSystem(_load_sets(args.sets))
    part = partitions.load_partition(args.partition)
    rep = partitions.check_fractional_subadditive_c(system, part)
    p.line(f"lhs={p.num(rep.lhs)} rhs={p.num(rep.rhs)} holds={str(rep.holds).lower()} equality={str(rep.is_equality).lower()}")
    if rep.is_equality:
        p.line(f"equality condition: {partitions.equality_condition(system, part)}")
    return EXIT_OK if rep.holds else EXIT_FALSE


def cmd_fractal(args, p: Printer) -> int:
    spec = fractal.FractalSpec(args.N, args.k, args.depth)
    p.set_json(fractal.fractal_endpoints(spec) if args.endpoints else fractal.fractal_cover(spec))
    return EXIT_OK


def cmd_lyu3(args, p: Printer) -> int:
    w = regions.fractal_lyusternik3_witness(args.a13, args.a23, args.a123, args.depth)
    p.line(f"N={w.params.N} k1={w.params.k1} k2={w.params.k2} depth={w.depth}")
    p.line("target   " + " ".join(p.num(x) for x in w.target.vector()))
    p.line("achieved " + " ".join(p.num(x) for x in w.achieved.vector()))
    if args.output:
        with open(args.output, "w") as fh:
            json.dump({"sets": [s.to_json() for s in w.sets], "achieved": w.achieved.to_json()}, fh)
            fh.write("\n")
    return EXIT_OK


def cmd_sweep(args, p: Printer) -> int:
    with open(args.config) as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{args.config}: invalid JSON at line {exc.lineno}: {exc.msg}") from None
    mode = raw.pop("mode", "lower_bound") if isinstance(raw, dict) else None
    if mode == "ksum":
        k, samples = raw.pop("k", 3), raw.pop("samples", 1000)
        rep = oracle.search_ksum_counterexample(k, samples, raw.get("seed", 0), raw.get("report"))
        p.line(f"k={k} samples={samples} min_slack={p.num(rep.min_slack)} below={len(rep.below)}")
        return EXIT_FALSE if rep.below else EXIT_OK
    cfg = oracle.SweepConfig.from_json(raw)
    if mode == "lower_bound":
        rep = oracle.verify_lower_bound_sweep(cfg)
        p.line(f"cells={rep.cells} violations={len(rep.violations)} worst_slack={p.num(rep.worst_slack)} equality_cells={len(rep.equality_cells)}")
        return EXIT_OK if rep.ok else EXIT_FALSE
    if mode == "gap_claims":
        rep = oracle.verify_gap_claims(cfg)
        p.line(f"cells={rep.cells} skipped={rep.skipped} mismatches={len(rep.mismatches)}")
        return EXIT_OK if rep.ok else EXIT_FALSE
    raise ParseError(f'unknown sweep mode {mode!r}; use "lower_bound", "gap_claims" or "ksum"')


def slice_rows(D: int) -> list[tuple[Fraction, Fraction, Fraction, Fraction]]:
    grid = [Fraction(i, D - 1) for i in range(D)]
    return [(c1, c2, bounds.lower_bound_L(c1, c2), bounds.upper_bound_M(c1, c2)) for c1 in grid for c2 in grid]


def cmd_slice(args, p: Printer) -> int:
    if args.grid < 2:
        raise ConvexityError("--grid must be >= 2")
    with open(args.output, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["c1", "c2", "L", "M"])
        for row in slice_rows(args.grid):
            w.writerow([p.num(x) for x in row])
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="convexity-index", description="Exact non-convexity index toolkit.")
    ap.add_argument("--decimal", type=int, metavar="P", help="render numbers as P-digit decimals")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("index", help="index, largest gap and diameter of a set file")
    s.add_argument("file")
    s.set_defaults(fn=cmd_index)

    s = sub.add_parser("sum", help="Minkowski sum of set files")
    s.add_argument("files", nargs="+")
    s.add_argument("-o", "--output")
    s.set_defaults(fn=cmd_sum)

    s = sub.add_parser("lower-bound", help="best lower bound on c(A1+A2)")
    s.add_argument("c1", type=_rat)
    s.add_argument("c2", type=_rat)
    s.set_defaults(fn=cmd_lower_bound)

    s = sub.add_parser("witness", help="tight pair, or a pair realizing (c1, c2, c12)")
    s.add_argument("c1", type=_rat)
    s.add_argument("c2", type=_rat)
    s.add_argument("c12", type=_rat, nargs="?")
    s.set_defaults(fn=cmd_witness)

    s = sub.add_parser("kbound", help="candidate lower bound for k-fold sums")
    s.add_argument("c", type=_rat, nargs="+")
    s.set_defaults(fn=cmd_kbound)

    s = sub.add_parser("cstar", help="induced integer index")
    s.add_argument("c", type=_rat)
    s.set_defaults(fn=cmd_cstar)

    s = sub.add_parser("gap-bound", help="largest-gap bound for a sum, gaps in descending order")
    s.add_argument("g", type=_rat, nargs="+")
    s.set_defaults(fn=cmd_gap_bound)

    s = sub.add_parser("region", help="region membership tests")
    rs = s.add_subparsers(dest="region", required=True)
    r = rs.add_parser("s12", help="index region of two sets on the line")
    for name in ("c1", "c2", "c12"):
        r.add_argument(name, type=_rat)
    r.set_defaults(fn=cmd_region)
    r = rs.add_parser("lyu2", help="volume region of two sets in R^n")
    r.add_argument("n", type=int)
    for name in ("a", "b", "c"):
        r.add_argument(name, type=_rat)
    r.set_defaults(fn=cmd_region)

    s = sub.add_parser("partition", help="fractional partition checks")
    ps = s.add_subparsers(dest="partition_cmd", required=True)
    r = ps.add_parser("check", help="fractional subadditivity of the index")
    r.add_argument("sets")
    r.add_argument("partition")
    r.set_defaults(fn=cmd_partition)

    s = sub.add_parser("fractal", help="depth-d cover (or endpoints) of the digit set C(N, k)")
    s.add_argument("N", type=int)
    s.add_argument("k", type=int)
    s.add_argument("depth", type=int)
    s.add_argument("--endpoints", action="store_true")
    s.set_defaults(fn=cmd_fractal)

    s = sub.add_parser("lyu3-witness", help="fractal sets approximating a three-set volume vector")
    for name in ("a13", "a23", "a123"):
        s.add_argument(name, type=_rat)
    s.add_argument("depth", type=int)
    s.add_argument("-o", "--output")
    s.set_defaults(fn=cmd_lyu3)

    s = sub.add_parser("sweep", help="run an oracle sweep from a JSON config")
    s.add_argument("config")
    s.set_defaults(fn=cmd_sweep)

    s = sub.add_parser("slice", help="CSV of (c1, c2, L, M) over a D x D grid")
    s.add_argument("--grid", type=int, required=True, metavar="D")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(fn=cmd_slice)
    return ap


def run(argv: Sequence[str] | None = None, out=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.decimal is not None and args.decimal < 0:
        print("error: --decimal must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    p = Printer(args.decimal, out)
    try:
        return args.fn(args, p)
    except (ConvexityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
