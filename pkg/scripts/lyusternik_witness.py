"""Fractal three-set volume witnesses along a sequence whose limit is excluded from the region."""

import argparse

from convexity_index.regions import (
    fractal_lyusternik3_witness,
    lyusternik_limit_excluded,
    natural_order,
    non_closedness_limit,
    non_closedness_sequence,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=4)
    ap.add_argument("--kmax", type=int, default=8)
    args = ap.parse_args()
    for k in range(2, args.kmax + 1):
        target = non_closedness_sequence(k)
        t = target[{1, 3}]
        w = fractal_lyusternik3_witness(t, t, 1, args.depth)
        err = max(abs(w.achieved[S] - target[S]) for S in natural_order(3))
        print(f"k={k} N={w.params.N} k1={w.params.k1} k2={w.params.k2} "
              f"achieved={[str(v) for v in w.achieved.vector()]} max_err={float(err):.3g}")
    excluded, reason = lyusternik_limit_excluded(non_closedness_limit())
    print(f"limit {[str(v) for v in non_closedness_limit().vector()]} excluded={excluded}: {reason}")


if __name__ == "__main__":
    main()
