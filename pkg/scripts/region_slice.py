"""Tabulate the admissible band [L(c1,c2), max(c1,c2)] for the two-set sum index on a grid."""

import argparse
import csv
import sys

from convexity_index.cli import slice_rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grid", type=int, default=11)
    ap.add_argument("-o", "--output", help="CSV path (stdout when omitted)")
    args = ap.parse_args()
    fh = open(args.output, "w", newline="") if args.output else sys.stdout
    w = csv.writer(fh)
    w.writerow(["c1", "c2", "L", "M", "width"])
    for c1, c2, lo, hi in slice_rows(args.grid):
        w.writerow([c1, c2, lo, hi, float(hi - lo)])
    if args.output:
        fh.close()


if __name__ == "__main__":
    main()
