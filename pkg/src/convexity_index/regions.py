"""Index and volume regions for two and three sets.

Region points are set functions on the subsets of [m]; their vector form uses
the natural ordering (by size, then lexicographic): for m = 2 that is
(0, v1, v2, v12), for m = 3 (0, v1, v2, v3, v12, v13, v23, v123).
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import floor

from .bounds import balanced_set, lower_bound_L, minimizing_order, r_of_c, upper_bound_M
from .errors import (
    BadOrdering,
    DegenerateM,
    DimensionTooSmall,
    KTooSmall,
    NegativeInput,
    NotMember,
    ParseError,
)
from .fractal import FractalSpec, fractal_cover
from .index import ProductSet
from .sets import CompactSet1D, RationalLike, as_rational, measure, minkowski_sum, scale, translate


def natural_order(m: int) -> list[frozenset[int]]:
    return [frozenset(c) for k in range(1, m + 1) for c in combinations(range(1, m + 1), k)]


def _key(S: frozenset[int]) -> str:
    return ",".join(str(i) for i in sorted(S))


@dataclass(frozen=True)
class RegionPoint:
    m: int
    values: dict = field(hash=False)

    def __post_init__(self):
        vals = {frozenset(S): as_rational(v) for S, v in self.values.items() if S}
        if any(v < 0 for v in vals.values()):
            raise NegativeInput("region point values must be >= 0")
        object.__setattr__(self, "values", vals)

    def __getitem__(self, S) -> Fraction:
        S = frozenset(S)
        if not S:
            return Fraction(0)
        return self.values[S]

    def vector(self) -> tuple[Fraction, ...]:
        return (Fraction(0),) + tuple(self[S] for S in natural_order(self.m))

    def to_json(self) -> dict:
        return {"m": self.m, "values": {_key(S): str(self[S]) for S in natural_order(self.m)}}

    @classmethod
    def from_json(cls, obj) -> RegionPoint:
        try:
            m = obj["m"]
            raw = obj["values"]
            values = {frozenset(int(i) for i in k.split(",")): as_rational(v) for k, v in raw.items()}
        except (KeyError, TypeError, AttributeError, ValueError) as exc:
            raise ParseError(f"malformed region point: {exc}") from None
        return cls(m, values)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def region_point_of(sets: list[CompactSet1D], f=measure) -> RegionPoint:
    """Set function S -> f(sum of sets[i-1], i in S) as a region point."""
    m = len(sets)
    values = {}
    for S in natural_order(m):
        total = sets[min(S) - 1]
        for i in sorted(S)[1:]:
            total = minkowski_sum(total, sets[i - 1])
        values[S] = f(total)
    return RegionPoint(m, values)


# ---------------------------------------------------------------------------
# the index region in dimension one


class Piece(enum.Enum):
    BOTH = "{1,2}"
    FIRST = "{1}"
    SECOND = "{2}"
    EMPTY = "{}"


@dataclass
class Membership:
    member: bool
    piece: Piece | None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.member


def _nonneg(*xs: RationalLike) -> list[Fraction]:
    out = [as_rational(x) for x in xs]
    if any(x < 0 for x in out):
        raise NegativeInput(f"inputs must be >= 0, got {[str(x) for x in out]}")
    return out


def schneider_membership_S12(c1: RationalLike, c2: RationalLike, c12: RationalLike) -> Membership:
    c1, c2, c12 = _nonneg(c1, c2, c12)
    if c1 == c2 == c12 == 0:
        return Membership(True, Piece.EMPTY)
    in_unit = c1 <= 1 and c2 <= 1
    if in_unit:
        L, M = lower_bound_L(c1, c2), upper_bound_M(c1, c2)
        if L <= c12 < M:
            return Membership(True, Piece.BOTH)
    if c2 == 0 and c12 == c1 and c1 <= 1:
        return Membership(True, Piece.FIRST)
    if c1 == 0 and c12 == c2 and c2 <= 1:
        return Membership(True, Piece.SECOND)
    if not in_unit:
        return Membership(False, None, "c1 and c2 must lie in [0, 1]")
    return Membership(False, None, f"c12 ∈ [{L}, {M}) required")


def _solve_scale(c_first: Fraction, c_second: Fraction, c12: Fraction) -> Fraction | None:
    """m >= 2 with c(B1 + m B2) = c12 for balanced B1, B2 of indices c_first, c_second.

    On m >= 2 the index of the sum is (m - 1 - r1 - m r2) / (1 + m + r1 + m r2)
    (clamped at 0), increasing towards c_second; invert it in closed form.
    """
    r1, r2 = r_of_c(c_first), r_of_c(c_second)
    denom = (1 - r2) - c12 * (1 + r2)
    if denom <= 0:
        return None
    m = (1 + r1) * (1 + c12) / denom
    return m if m >= 2 else None


def schneider_witness_S12(
    c1: RationalLike, c2: RationalLike, c12: RationalLike
) -> tuple[CompactSet1D, CompactSet1D]:
    """Two sets with indices (c1, c2) and sum index c12, for any member point."""
    c1, c2, c12 = _nonneg(c1, c2, c12)
    mem = schneider_membership_S12(c1, c2, c12)
    if not mem:
        raise NotMember(f"({c1}, {c2}, {c12}) is not in the region: {mem.reason}")
    point = CompactSet1D.points([0])
    if mem.piece is Piece.EMPTY:
        return point, point
    if mem.piece is Piece.FIRST:
        return balanced_set(c1), point
    if mem.piece is Piece.SECOND:
        return point, balanced_set(c2)
    cs = (c1, c2)
    if upper_bound_M(c1, c2) == 0:
        raise DegenerateM("the two-set piece is empty when max(c1, c2) = 0")
    star = minimizing_order(c1, c2)
    top = (0, 1) if c1 <= c2 else (1, 0)
    for first, second in (star, top):
        m = _solve_scale(cs[first], cs[second], c12)
        if m is None:
            continue
        out = [None, None]
        out[first] = balanced_set(cs[first], 1)
        out[second] = balanced_set(cs[second], m)
        return out[0], out[1]
    raise NotMember(f"no scaling m >= 2 reaches c12 = {c12} for ({c1}, {c2})")


def partial_char_Sn2(n: int, c1: RationalLike, c2: RationalLike, c12: RationalLike) -> bool:
    """Sufficient test for membership of (c1, c2, c12) in the index region of R^n, n >= 2."""
    if n < 2:
        raise DimensionTooSmall(f"the partial characterization needs n >= 2, got {n}")
    c1, c2, c12 = _nonneg(c1, c2, c12)
    return c1 <= 1 and c2 <= 1 and c12 <= max(c1, c2)


def partial_char_witness_Sn2(c1: RationalLike, c2: RationalLike, c12: RationalLike):
    """Planar witness for a point accepted by partial_char_Sn2.

    Returns ("annulus", m) when c12 < max(c1, c2): the annuli A(c1, 1) and
    m A(c2, 1) sum to an annulus of index c12 (largest first). Returns
    ("product", (P1, P2)) when c12 = max(c1, c2): balanced sets placed on the
    two coordinate axes. Single points when c1 = c2 = 0.
    """
    from .bounds import annulus_sum_index

    c1, c2, c12 = _nonneg(c1, c2, c12)
    if not partial_char_Sn2(2, c1, c2, c12):
        raise NotMember(f"({c1}, {c2}, {c12}) is outside the sufficient piece")
    M = max(c1, c2)
    pt = CompactSet1D.points([0])
    if M == 0:
        return ("product", (ProductSet([pt, pt]), ProductSet([pt, pt])))
    if c12 < M:
        m = (M - c12) / (1 + c12)
        assert annulus_sum_index(M, m) == c12
        return ("annulus", m)
    return ("product", (ProductSet([balanced_set(c1), pt]), ProductSet([pt, balanced_set(c2)])))


# ---------------------------------------------------------------------------
# volume regions


def integer_nth_root(x: int, n: int) -> int:
    """floor(x ** (1/n)) for integers x >= 0, n >= 1."""
    if x < 0:
        raise ValueError("negative radicand")
    if x < 2 or n == 1:
        return x
    y = 1 << ((x.bit_length() + n - 1) // n)
    while True:
        z = ((n - 1) * y + x // y ** (n - 1)) // n
        if z >= y:
            break
        y = z
    while y**n > x:
        y -= 1
    while (y + 1) ** n <= x:
        y += 1
    return y


def exact_nth_root(x: Fraction, n: int) -> Fraction | None:
    """The rational n-th root of x >= 0 if it exists."""
    p, q = x.numerator, x.denominator
    rp, rq = integer_nth_root(p, n), integer_nth_root(q, n)
    if rp**n == p and rq**n == q:
        return Fraction(rp, rq)
    return None


def _root_bracket(x: Fraction, n: int, bits: int) -> tuple[Fraction, Fraction]:
    """[lo, hi] of width 2^-bits containing x^(1/n)."""
    scaled = (x.numerator << (n * bits)) // x.denominator
    lo = integer_nth_root(scaled, n)
    return Fraction(lo, 1 << bits), Fraction(lo + 1, 1 << bits)


def lyusternik_membership_L2(n: int, a: RationalLike, b: RationalLike, c: RationalLike) -> bool:
    """Exact test of c >= (a^(1/n) + b^(1/n))^n.

    Equality with a, b > 0 forces a/b to be a rational n-th power (sums of
    real radicals from distinct classes are linearly independent over Q), so
    that case is settled in rational arithmetic and every other case is a
    strict inequality, which interval narrowing of the three roots decides.
    """
    if n < 1:
        raise DimensionTooSmall(f"dimension must be >= 1, got {n}")
    a, b, c = _nonneg(a, b, c)
    if n == 1:
        return c >= a + b
    if a == 0 or b == 0:
        return c >= a + b
    t = exact_nth_root(a / b, n)
    if t is not None:
        return c >= b * (1 + t) ** n
    bits = 32
    while bits <= 1 << 20:
        alo, ahi = _root_bracket(a, n, bits)
        blo, bhi = _root_bracket(b, n, bits)
        clo, chi = _root_bracket(c, n, bits)
        if clo > ahi + bhi:
            return True
        if chi < alo + blo:
            return False
        bits *= 2
    raise RuntimeError("root comparison did not separate; inputs too close for the precision guard")


# ---------------------------------------------------------------------------
# three sets: the fractal construction


@dataclass(frozen=True)
class FractalParams:
    N: int
    k1: int
    k2: int


def choose_fractal_params(a: Fraction, b: Fraction) -> FractalParams:
    """Smallest N admitting k1 + k2 = N - 1, 0 < 2 k1 < N - 1, k1/(N-1) + a < b.

    k1 >= 1 keeps C(N, k2) of measure zero; k1 = 1 is admissible whenever any
    k1 is, so it yields the smallest N.
    """
    if not b > a:
        raise BadOrdering(f"need b > a, got a={a}, b={b}")
    N = max(4, floor(1 / (b - a)) + 2)
    return FractalParams(N, 1, N - 2)


@dataclass
class LyusternikWitness:
    sets: tuple[CompactSet1D, CompactSet1D, CompactSet1D]
    achieved: RegionPoint
    target: RegionPoint
    params: FractalParams
    depth: int
    a: Fraction
    b: Fraction
    predicted: dict = field(default_factory=dict)
    upper: dict = field(default_factory=dict)
    fractal_component_13: Fraction = Fraction(0)


def fractal_lyusternik3_witness(
    alpha13: RationalLike, alpha23: RationalLike, alpha123: RationalLike, depth: int
) -> LyusternikWitness:
    """Depth-d sets approximating the volume vector (0,0,0,0,0,a13,a23,a123) in dimension one.

    Built from B1 = C(N,k1) u {j a : j < q_b} u {b - a}, B2 = translates of
    C(N,k1) at 0..q_a-1 and a-1, B3 = C(N,k2), each fractal replaced by its
    depth-d cover, then dilated by alpha13. Alongside the engine measures the
    witness carries the exact values (``predicted``) or upper bounds
    (``upper``) the construction implies, in units where alpha13 = 1.
    """
    a13, a23, a123 = (as_rational(x) for x in (alpha13, alpha23, alpha123))
    if not (0 < a13 <= a23 < a123):
        raise BadOrdering(f"need 0 < alpha13 <= alpha23 < alpha123, got {a13}, {a23}, {a123}")
    if depth < 1:
        raise KTooSmall(f"depth must be >= 1, got {depth}")
    a, b = a23 / a13, a123 / a13
    params = choose_fractal_params(a, b)
    N, k1, k2 = params.N, params.k1, params.k2
    qa = floor(a)
    qb = floor(b / a)

    c1 = fractal_cover(FractalSpec(N, k1, depth))
    c2 = fractal_cover(FractalSpec(N, k2, depth))
    B1 = CompactSet1D(list(c1.intervals) + [(j * a, j * a) for j in range(qb)] + [(b - a, b - a)])
    B2 = CompactSet1D([iv for j in range(qa) for iv in translate(c1, j).intervals] + list(translate(c1, a - 1).intervals))
    B3 = c2
    sets = tuple(scale(B, a13) for B in (B1, B2, B3))

    A1, A2, A3 = sets
    s12 = minkowski_sum(A1, A2)
    s13 = minkowski_sum(A1, A3)
    s23 = minkowski_sum(A2, A3)
    s123 = minkowski_sum(A1, s23)
    one, two, three = frozenset({1}), frozenset({2}), frozenset({3})
    achieved = RegionPoint(
        3,
        {
            one: measure(A1),
            two: measure(A2),
            three: measure(A3),
            one | two: measure(s12),
            one | three: measure(s13),
            two | three: measure(s23),
            one | two | three: measure(s123),
        },
    )
    target = RegionPoint(3, {one | three: a13, two | three: a23, one | two | three: a123, one: 0, two: 0, three: 0, one | two: 0})

    eps = Fraction(1, N**depth)
    mu = lambda k: Fraction(k + 1, N) ** depth  # noqa: E731
    diam1 = Fraction(k1, N - 1) * (1 - eps) + eps
    predicted = {
        one: mu(k1),
        three: mu(k2),
        two | three: a + eps,
        one | two | three: max(b, a + diam1) + eps,
    }
    upper = {
        two: (qa + 1) * mu(k1),
        one | two: (qa + 1) * (2 * Fraction(2 * k1 + 1, N) ** depth + (qb + 1) * mu(k1)),
        one | three: 1 + eps + (qb + 1) * mu(k2),
    }
    component = measure(minkowski_sum(scale(c1, a13), scale(c2, a13))) / a13
    return LyusternikWitness(sets, achieved, target, params, depth, a, b, predicted, upper, component)


def non_closedness_sequence(k: int) -> RegionPoint:
    """(0,0,0,0,0,1-1/k,1-1/k,1): realizable for every k >= 2, limit is not."""
    if k < 2:
        raise KTooSmall(f"k must be >= 2, got {k}")
    t = 1 - Fraction(1, k)
    one, two, three = frozenset({1}), frozenset({2}), frozenset({3})
    return RegionPoint(3, {one: 0, two: 0, three: 0, one | two: 0, one | three: t, two | three: t, one | two | three: 1})


def non_closedness_limit() -> RegionPoint:
    one, two, three = frozenset({1}), frozenset({2}), frozenset({3})
    return RegionPoint(3, {one: 0, two: 0, three: 0, one | two: 0, one | three: 1, two | three: 1, one | two | three: 1})


def lyusternik_limit_excluded(p: RegionPoint) -> tuple[bool, str]:
    """Brunn-Minkowski equality obstruction for three-set volume vectors.

    If |A_i| = 0 and |A_1+A_2+A_3| = |A_j+A_k| > 0, equality holds in the
    Brunn-Minkowski inequality for A_i + (A_j + A_k); with |A_i| = 0 that
    forces A_i to be a point, so |A_i+A_j| = |A_j| and |A_i+A_k| = |A_k|.
    A vector violating this is outside the region. False means only that
    this argument does not exclude the point.
    """
    if p.m != 3:
        raise DimensionTooSmall("the exclusion test is for three sets")
    full = frozenset({1, 2, 3})
    for i in (1, 2, 3):
        j, k = (x for x in (1, 2, 3) if x != i)
        if p[{i}] == 0 and p[full] == p[{j, k}] > 0:
            if p[{i, j}] != p[{j}] or p[{i, k}] != p[{k}]:
                return True, (
                    f"|A{i}| = 0 and |A123| = |A{j}{k}| > 0 force A{i} to be a point, "
                    f"but |A{i}{j}| = {p[{i, j}]} != |A{j}| = {p[{j}]} or |A{i}{k}| = {p[{i, k}]} != |A{k}| = {p[{k}]}"
                )
    return False, ""
