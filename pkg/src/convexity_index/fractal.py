"""Finite-depth approximations of C(N, k), the base-N digit set with digits 0..k.

At depth d the fractal is bracketed by two exact finite objects:

* the endpoint set: all digit sums sum_{j<=d} x_j N^-j  (a subset of C(N, k)),
* the cover: the union of [e, e + N^-d] over those endpoints (a superset).

Everything is computed on integers over the common denominator N^d.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import BadSpec, DigitOverflow
from .sets import CompactSet1D, Interval, contains, measure, minkowski_sum

MAX_PIECES = 10**6


@dataclass(frozen=True)
class FractalSpec:
    N: int
    k: int
    depth: int

    def __post_init__(self):
        if self.N < 3:
            raise BadSpec(f"N must be >= 3, got {self.N}")
        if not 0 <= self.k <= self.N - 1:
            raise BadSpec(f"k must lie in [0, N-1] = [0, {self.N - 1}], got {self.k}")
        if self.depth < 1:
            raise BadSpec(f"depth must be >= 1, got {self.depth}")
        if (self.k + 1) ** self.depth > MAX_PIECES:
            raise BadSpec(f"(k+1)^depth = {(self.k + 1) ** self.depth} exceeds {MAX_PIECES} pieces")


def _digit_sums(N: int, k: int, depth: int) -> list[int]:
    """Numerators over N^depth of all digit expansions, in increasing order."""
    vals = [0]
    for _ in range(depth):
        vals = [v * N + x for v in vals for x in range(k + 1)]
    return vals


def _from_integer_intervals(pairs: list[tuple[int, int]], den: int) -> CompactSet1D:
    # pairs sorted by left endpoint
    merged: list[list[int]] = []
    for lo, hi in pairs:
        if merged and lo <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    return CompactSet1D._trusted(tuple(Interval(Fraction(lo, den), Fraction(hi, den)) for lo, hi in merged))


def fractal_endpoints(s: FractalSpec) -> CompactSet1D:
    vals = _digit_sums(s.N, s.k, s.depth)
    # base-N expansions with digits <= N-1 are unique
    assert len(set(vals)) == len(vals)
    return _from_integer_intervals([(v, v) for v in vals], s.N**s.depth)


def fractal_cover(s: FractalSpec) -> CompactSet1D:
    vals = _digit_sums(s.N, s.k, s.depth)
    return _from_integer_intervals([(v, v + 1) for v in vals], s.N**s.depth)


def fractal_measure(s: FractalSpec) -> Fraction:
    return Fraction(s.k + 1, s.N) ** s.depth


class Diameter(NamedTuple):
    limit: Fraction
    at_depth: Fraction | None


def fractal_diameter_limit(N: int, k: int, depth: int | None = None) -> Diameter:
    """diam C(N, k) = k/(N-1); at finite depth the cover has k(1 - N^-d)/(N-1) + N^-d."""
    FractalSpec(N, k, 1 if depth is None else depth)
    limit = Fraction(k, N - 1)
    if depth is None:
        return Diameter(limit, None)
    tail = Fraction(1, N**depth)
    return Diameter(limit, limit * (1 - tail) + tail)


@dataclass
class SumCheck:
    endpoints_equal: bool
    cover_contains: bool
    cover_sum: CompactSet1D

    @property
    def ok(self) -> bool:
        return self.endpoints_equal and self.cover_contains


def fractal_sum_check(N: int, k: int, l: int, depth: int) -> SumCheck:
    """Digit-set identity C(N,k) + C(N,l) = C(N,k+l) at finite depth."""
    if k + l > N - 1:
        raise DigitOverflow(f"k + l = {k + l} exceeds N - 1 = {N - 1}")
    sk, sl, skl = FractalSpec(N, k, depth), FractalSpec(N, l, depth), FractalSpec(N, k + l, depth)
    ends = minkowski_sum(fractal_endpoints(sk), fractal_endpoints(sl)) == fractal_endpoints(skl)
    cover_sum = minkowski_sum(fractal_cover(sk), fractal_cover(sl))
    return SumCheck(ends, contains(cover_sum, fractal_cover(skl)), cover_sum)


def cover_measure_matches(s: FractalSpec) -> bool:
    return measure(fractal_cover(s)) == fractal_measure(s)
