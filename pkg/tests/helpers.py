"""Hypothesis strategies and naive reference routes shared by the tests.

The reference routes deliberately avoid the package's integer-numerator sum
and its merge routine so they can serve as independent checks.
"""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from convexity_index.sets import CompactSet1D

DEN = 6


@st.composite
def rationals(draw, lo=0, hi=12, den=DEN):
    return Fraction(draw(st.integers(lo * den, hi * den)), den)


@st.composite
def raw_intervals(draw, max_pieces=4, span=12, den=DEN):
    n = draw(st.integers(1, max_pieces))
    out = []
    for _ in range(n):
        a = draw(rationals(0, span, den))
        length = draw(st.one_of(st.just(Fraction(0)), rationals(0, span // 2, den)))
        out.append((a, a + length))
    return out


@st.composite
def compact_sets(draw, max_pieces=4, span=12, den=DEN):
    return CompactSet1D(draw(raw_intervals(max_pieces, span, den)))


unit_rationals = st.builds(Fraction, st.integers(0, 60), st.just(60))


# ---------------------------------------------------------------------------
# naive reference routes


def naive_union(pairs):
    """Union of closed intervals by repeated pairwise absorption."""
    pieces = [list(p) for p in pairs]
    changed = True
    while changed:
        changed = False
        for i in range(len(pieces)):
            for j in range(i + 1, len(pieces)):
                a, b = pieces[i], pieces[j]
                if a[0] <= b[1] and b[0] <= a[1]:
                    pieces[i] = [min(a[0], b[0]), max(a[1], b[1])]
                    del pieces[j]
                    changed = True
                    break
            if changed:
                break
    return sorted((Fraction(lo), Fraction(hi)) for lo, hi in pieces)


def naive_sum(*sets):
    acc = [(Fraction(0), Fraction(0))]
    for s in sets:
        acc = naive_union([(a + c, b + d) for a, b in acc for c, d in s.intervals])
    return acc


def naive_index(pieces):
    lo, hi = pieces[0][0], pieces[-1][1]
    if lo == hi:
        return Fraction(0)
    gap = max((pieces[i + 1][0] - pieces[i][1] for i in range(len(pieces) - 1)), default=Fraction(0))
    return gap / (hi - lo)


def naive_measure(pieces):
    return sum((hi - lo for lo, hi in pieces), Fraction(0))


def in_sum(x, a: CompactSet1D, b: CompactSet1D) -> bool:
    """x in a + b iff x - I meets some interval of b for some interval I of a."""
    return any(x - ahi <= bhi and bl <= x - alo for alo, ahi in a.intervals for bl, bhi in b.intervals)
