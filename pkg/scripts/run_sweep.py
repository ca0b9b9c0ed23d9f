"""Lower-bound and gap-claim sweeps over the L/R-set grid.

    python3 scripts/run_sweep.py --density 5 --workers 4 --report out/sweep.jsonl
"""

import argparse
import time

from convexity_index.oracle import SweepConfig, verify_gap_claims, verify_lower_bound_sweep


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--density", type=int, default=5, help="grid points per parameter axis")
    ap.add_argument("--sides", nargs="+", default=["LL", "LR", "RL", "RR"])
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--report", help="JSONL path for the lower-bound records")
    args = ap.parse_args()

    d = args.density
    cfg = SweepConfig(r1=d, r2=d, n1=d, n2=d, m=d, sides=tuple(args.sides), workers=args.workers, report=args.report)
    t = time.perf_counter()
    lb = verify_lower_bound_sweep(cfg)
    print(f"lower bound: cells={lb.cells} violations={len(lb.violations)} worst_slack={lb.worst_slack} "
          f"equality_cells={len(lb.equality_cells)} ({time.perf_counter() - t:.1f}s)")
    print("minimum sum index per (c1, c2):")
    for (c1, c2), v in sorted(lb.min_by_index_pair.items()):
        print(f"  c1={c1} c2={c2} min={v}")

    t = time.perf_counter()
    gc = verify_gap_claims(SweepConfig(r1=d, r2=d, n1=d, n2=d, m=d, sides=tuple(args.sides), workers=args.workers))
    print(f"gap claims: cells={gc.cells} skipped={gc.skipped} mismatches={len(gc.mismatches)} ({time.perf_counter() - t:.1f}s)")


if __name__ == "__main__":
    main()
