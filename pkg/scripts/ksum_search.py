"""Random search for k-tuples whose sum index falls below the k-fold candidate bound."""

import argparse

from convexity_index.oracle import search_ksum_counterexample


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, nargs="+", default=[3, 4, 5])
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    for k in args.k:
        rep = search_ksum_counterexample(k, args.samples, args.seed)
        print(f"k={k} samples={rep.samples} min_slack={rep.min_slack} below={len(rep.below)}")
        for rec in rep.below[:5]:
            print("  ", rec)


if __name__ == "__main__":
    main()
