"""Closed-form bounds on the index of sumsets, and the sets that attain them.

Notation used throughout: for an index c in [0, 1], ``r = (1 - c) / (1 + c)``
is the relative length of each interval of the balanced two-interval set
``[0, r] u [1, 1 + r]`` whose index is c. The map is its own inverse.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import NamedTuple, Sequence

from .errors import ConstraintViolated, KTooLarge, Negative, NotSorted, OutOfRange
from .sets import CompactSet1D, RationalLike, as_rational

ZERO = Fraction(0)
ONE = Fraction(1)
KSUM_MAX_K = 8


def _unit(c: RationalLike, name: str = "c") -> Fraction:
    c = as_rational(c)
    if not 0 <= c <= 1:
        raise OutOfRange(f"{name} must lie in [0, 1], got {c}")
    return c


def r_of_c(c: RationalLike) -> Fraction:
    c = _unit(c)
    return (1 - c) / (1 + c)


# the map is an involution on [0, 1]
c_of_r = r_of_c


def ordered_ratio(c_first: Fraction, c_second: Fraction) -> Fraction:
    """(1 - r1 - 2 r2) / (3 + r1 + 2 r2) for one ordering, without the clamp at 0."""
    r1, r2 = r_of_c(c_first), r_of_c(c_second)
    return (1 - r1 - 2 * r2) / (3 + r1 + 2 * r2)


def minimizing_order(c1: RationalLike, c2: RationalLike) -> tuple[int, int]:
    """Ordering (first, second) of the indices {0, 1} minimizing ordered_ratio.

    Ties resolve to the identity ordering.
    """
    cs = (_unit(c1, "c1"), _unit(c2, "c2"))
    a = ordered_ratio(cs[0], cs[1])
    b = ordered_ratio(cs[1], cs[0])
    return (0, 1) if a <= b else (1, 0)


def lower_bound_L(c1: RationalLike, c2: RationalLike) -> Fraction:
    c1, c2 = _unit(c1, "c1"), _unit(c2, "c2")
    return max(ZERO, min(ordered_ratio(c1, c2), ordered_ratio(c2, c1)))


def upper_bound_M(c1: RationalLike, c2: RationalLike) -> Fraction:
    return max(_unit(c1, "c1"), _unit(c2, "c2"))


def positive_assumption(r1: Fraction, r2: Fraction) -> bool:
    """Regime where the four two-interval case formulas are derived."""
    return min(1 - r1 - 2 * r2, 1 - r2 - 2 * r1) > 0


def balanced_set(c: RationalLike, unit: RationalLike = 1) -> CompactSet1D:
    """[0, u r] u [u, u (1 + r)] with r = r(c); its index is c."""
    r = r_of_c(c)
    u = as_rational(unit)
    return CompactSet1D([(0, u * r), (u, u * (1 + r))])


# ---------------------------------------------------------------------------
# L-sets, R-sets, balanced sets


class Side(enum.Enum):
    LEFT = "L"
    RIGHT = "R"
    BALANCED = "B"

    @property
    def sign(self) -> int:
        return {Side.LEFT: 1, Side.RIGHT: -1, Side.BALANCED: 0}[self]


@dataclass(frozen=True)
class LRSetParams:
    r: Fraction
    n: Fraction
    side: Side

    def __post_init__(self):
        object.__setattr__(self, "r", as_rational(self.r))
        object.__setattr__(self, "n", as_rational(self.n))
        if not 0 <= self.r <= 1:
            raise OutOfRange(f"r must lie in [0, 1], got {self.r}")
        if self.n < 0:
            raise ConstraintViolated(f"imbalance n must be >= 0, got {self.n}")
        if self.side is Side.BALANCED and self.n != 0:
            raise ConstraintViolated("a balanced set has n = 0")
        if self.side is Side.LEFT and self.n * (1 + self.r) / 2 > self.r:
            raise ConstraintViolated(f"L-set needs n(1+r)/2 <= r; r={self.r}, n={self.n}")
        if self.side is Side.RIGHT and self.n * (1 - self.r) / 2 > self.r:
            raise ConstraintViolated(f"R-set needs n(1-r)/2 <= r; r={self.r}, n={self.n}")

    @property
    def lengths(self) -> tuple[Fraction, Fraction]:
        """(left interval length, right interval length) of [0, a] u [1, 1 + a']."""
        s = self.side.sign
        return (self.r + s * self.n * (1 - self.r) / 2, self.r - s * self.n * (1 + self.r) / 2)

    @property
    def c(self) -> Fraction:
        return c_of_r(self.r)


def n_cap(r: Fraction, side: Side) -> Fraction | None:
    """Largest admissible imbalance for the side, or None when unbounded."""
    if side is Side.BALANCED:
        return ZERO
    if side is Side.LEFT:
        return 2 * r / (1 + r)
    if r == 1:
        return None
    return 2 * r / (1 - r)


def make_lr_set(p: LRSetParams) -> CompactSet1D:
    left, right = p.lengths
    return CompactSet1D([(0, left), (1, 1 + right)])


def tight_witness_pair(c1: RationalLike, c2: RationalLike) -> tuple[CompactSet1D, CompactSet1D]:
    """Pair with indices (c1, c2) whose sum has index exactly lower_bound_L(c1, c2).

    The first set of the minimizing ordering is the balanced set on [0, 1 + r],
    the second is the balanced set dilated by 2.
    """
    cs = (_unit(c1, "c1"), _unit(c2, "c2"))
    first, second = minimizing_order(*cs)
    out: list[CompactSet1D | None] = [None, None]
    out[first] = balanced_set(cs[first], 1)
    out[second] = balanced_set(cs[second], 2)
    return out[0], out[1]


class GapCandidates(NamedTuple):
    g1: Fraction
    g2: Fraction
    g3: Fraction
    g4: Fraction
    predicted_G: Fraction


def gap_candidates(p1: LRSetParams, p2: LRSetParams, m: RationalLike) -> GapCandidates:
    """Gap candidates of A1 + m A2 for two-interval sets A1 = I1 u J1, m A2 = I2 u J2.

    g1 = L(I1+J2) - R(I1+I2),  g2 = L(J1+I2) - R(I1+J2),
    g3 = L(J1+J2) - R(J1+I2),  g4 = L(J1+J2) - R(I1+J2),
    expanded in (r, n, m). Only meaningful under ``positive_assumption``;
    balanced sets are handled by n = 0.
    """
    m = as_rational(m)
    if not 0 < m <= 1:
        raise OutOfRange(f"m must lie in (0, 1], got {m}")
    r1, n1, s1 = p1.r, p1.n, p1.side.sign
    r2, n2, s2 = p2.r, p2.n, p2.side.sign
    g1 = m - r1 - m * r2 - s1 * n1 * (1 - r1) / 2 - s2 * m * n2 * (1 - r2) / 2
    g2 = 1 - m - r1 - m * r2 - s1 * n1 * (1 - r1) / 2 + s2 * m * n2 * (1 + r2) / 2
    g3 = m - r1 - m * r2 + s1 * n1 * (1 + r1) / 2 - s2 * m * n2 * (1 - r2) / 2
    g4 = 1 - r1 - m * r2 - s1 * n1 * (1 - r1) / 2 + s2 * m * n2 * (1 + r2) / 2
    return GapCandidates(g1, g2, g3, g4, max(g1, g2, min(g3, g4), ZERO))


def product_lower_bound(c: Sequence[Sequence[RationalLike]]) -> Fraction:
    """Best lower bound for c(A1 + A2) with A_j products; c[j][i] = c(A_ji)."""
    if len(c) != 2 or len(c[0]) != len(c[1]) or len(c[0]) == 0:
        raise OutOfRange("expected a 2 x n matrix of indices with n >= 1")
    return max(lower_bound_L(a, b) for a, b in zip(c[0], c[1]))


# ---------------------------------------------------------------------------
# gaps of k-fold sums


def _check_descending(g: Sequence[RationalLike]) -> list[Fraction]:
    gs = [as_rational(x) for x in g]
    if not gs:
        raise OutOfRange("need at least one gap")
    if any(x < 0 for x in gs):
        raise Negative(f"gaps must be >= 0, got {gs}")
    if any(gs[i] < gs[i + 1] for i in range(len(gs) - 1)):
        raise NotSorted(f"gaps must be in descending order, got {gs}")
    return gs


def gap_sum_upper_bound(g: Sequence[RationalLike]) -> Fraction:
    """max_r (g_r - sum_{j>r} g_j) for g_1 >= ... >= g_k >= 0."""
    gs = _check_descending(g)
    best = None
    tail = ZERO
    for x in reversed(gs):
        v = x - tail
        best = v if best is None else max(best, v)
        tail += x
    return best


def gap_bound_witness(g: Sequence[RationalLike]) -> list[CompactSet1D]:
    gs = _check_descending(g)
    return [CompactSet1D.points([0, x]) for x in gs]


# ---------------------------------------------------------------------------
# k-fold candidate bound


def _ksum_values(c: Sequence[RationalLike]) -> tuple[list[Fraction], list[Fraction]]:
    cs = [_unit(x) for x in c]
    if len(cs) < 2:
        raise OutOfRange("the k-sum candidate needs k >= 2 indices")
    if len(cs) > KSUM_MAX_K:
        raise KTooLarge(f"k = {len(cs)} exceeds the enumeration cap {KSUM_MAX_K}")
    return cs, [r_of_c(x) for x in cs]


def _ksum_ratio(rs: Sequence[Fraction], order: Sequence[int]) -> Fraction:
    weighted = sum((rs[i] * (1 << j) for j, i in enumerate(order)), ZERO)
    k = len(order)
    return (1 - weighted) / ((1 << k) - 1 + weighted)


def ksum_minimizing_order(c: Sequence[RationalLike]) -> tuple[int, ...]:
    _, rs = _ksum_values(c)
    return min(permutations(range(len(rs))), key=lambda order: _ksum_ratio(rs, order))


def ksum_candidate_bound(c: Sequence[RationalLike]) -> Fraction:
    _, rs = _ksum_values(c)
    order = ksum_minimizing_order(c)
    return max(ZERO, _ksum_ratio(rs, order))


def ksum_candidate_witness(c: Sequence[RationalLike]) -> list[CompactSet1D]:
    """Sets A_i with index c_i whose sum has index ksum_candidate_bound(c).

    The j-th set of the minimizing ordering is the balanced set dilated by 2^(j-1).
    """
    cs, _ = _ksum_values(c)
    order = ksum_minimizing_order(cs)
    out: list[CompactSet1D | None] = [None] * len(cs)
    for j, i in enumerate(order):
        out[i] = balanced_set(cs[i], 1 << j)
    return out


def induced_index_cstar(c: RationalLike) -> int | float:
    """Smallest integer k >= log2(1 / (1 - c)); infinity at c = 1.

    Decided by comparing 1/(1 - c) against powers of two, never via float log.
    """
    c = _unit(c)
    if c == 1:
        return math.inf
    x = 1 / (1 - c)
    k = 0
    while (1 << k) < x:
        k += 1
    return k


def annulus_sum_index(c1: RationalLike, m: RationalLike) -> Fraction:
    """Index of A(c1, 1) + m A(c2, 1) = A(c1 - m, 1 + m) for planar annuli, 0 < m <= c1."""
    c1 = _unit(c1, "c1")
    m = as_rational(m)
    if not 0 < m <= c1:
        raise OutOfRange(f"need 0 < m <= c1, got m={m}, c1={c1}")
    return (c1 - m) / (1 + m)
