"""Exact finite unions of closed rational intervals on the real line.

A ``CompactSet1D`` is always normalized: intervals sorted, pairwise disjoint,
and separated by a strictly positive gap (touching intervals are merged).
Single points are degenerate intervals. The empty set is not representable;
the convention c(empty) = 0 therefore never arises in this package.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import lcm
from typing import Iterable, NamedTuple, Sequence, Union

from .errors import BadInterval, EmptySet, NonPositiveScale, ParseError

RationalLike = Union[int, Fraction, str]


def as_rational(x: RationalLike) -> Fraction:
    """Coerce ints, Fractions and strings like ``"4/3"`` to an exact Fraction.

    Floats are refused: they would silently smuggle rounding into exact code.
    """
    if isinstance(x, bool):
        raise ParseError(f"not a rational: {x!r}")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"cannot parse {x!r} as a rational") from exc
    raise ParseError(f"not an exact rational: {x!r}")


def format_rational(x: Fraction) -> str:
    return str(x)


class Interval(NamedTuple):
    lo: Fraction
    hi: Fraction

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo


def make_interval(lo: RationalLike, hi: RationalLike) -> Interval:
    lo, hi = as_rational(lo), as_rational(hi)
    if lo > hi:
        raise BadInterval(f"interval [{lo}, {hi}] has lo > hi")
    return Interval(lo, hi)


class CompactSet1D:
    """Immutable normalized union of closed intervals with rational endpoints."""

    __slots__ = ("_intervals",)

    def __init__(self, intervals: Iterable[Interval | Sequence[RationalLike]]):
        raw = [iv if isinstance(iv, Interval) else make_interval(*iv) for iv in intervals]
        object.__setattr__(self, "_intervals", _merge(raw))

    @classmethod
    def _trusted(cls, intervals: tuple[Interval, ...]) -> CompactSet1D:
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_intervals", intervals)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("CompactSet1D is immutable")

    # constructors

    @classmethod
    def interval(cls, lo: RationalLike, hi: RationalLike) -> CompactSet1D:
        return cls([make_interval(lo, hi)])

    @classmethod
    def points(cls, pts: Iterable[RationalLike]) -> CompactSet1D:
        return cls([(p, p) for p in pts])

    # accessors

    @property
    def intervals(self) -> tuple[Interval, ...]:
        return self._intervals

    @property
    def min(self) -> Fraction:
        return self._intervals[0].lo

    @property
    def max(self) -> Fraction:
        return self._intervals[-1].hi

    @property
    def diam(self) -> Fraction:
        return self.max - self.min

    @property
    def is_point(self) -> bool:
        return len(self._intervals) == 1 and self._intervals[0].lo == self._intervals[0].hi

    @property
    def is_interval(self) -> bool:
        """True for a single (possibly degenerate) interval, i.e. a convex set."""
        return len(self._intervals) == 1

    def gaps(self) -> list[Fraction]:
        ivs = self._intervals
        return [ivs[i + 1].lo - ivs[i].hi for i in range(len(ivs) - 1)]

    def __len__(self) -> int:
        return len(self._intervals)

    def __iter__(self):
        return iter(self._intervals)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CompactSet1D):
            return NotImplemented
        return self._intervals == other._intervals

    def __hash__(self) -> int:
        return hash(self._intervals)

    def __repr__(self) -> str:
        parts = []
        for lo, hi in self._intervals:
            parts.append(f"{{{lo}}}" if lo == hi else f"[{lo},{hi}]")
        return "CompactSet1D(" + " u ".join(parts) + ")"

    def __add__(self, other: CompactSet1D) -> CompactSet1D:
        return minkowski_sum(self, other)

    def __contains__(self, x: RationalLike) -> bool:
        x = as_rational(x)
        return any(lo <= x <= hi for lo, hi in self._intervals)

    # serialization

    def to_json(self) -> dict:
        return {"intervals": [[format_rational(lo), format_rational(hi)] for lo, hi in self._intervals]}

    @classmethod
    def from_json(cls, obj) -> CompactSet1D:
        if not isinstance(obj, dict) or "intervals" not in obj:
            raise ParseError('expected an object with an "intervals" field')
        raw = obj["intervals"]
        if not isinstance(raw, list):
            raise ParseError('"intervals" must be a list')
        out = []
        for i, pair in enumerate(raw):
            if not isinstance(pair, list) or len(pair) != 2:
                raise ParseError(f"intervals[{i}]: expected a [lo, hi] pair")
            vals = []
            for j, v in enumerate(pair):
                try:
                    vals.append(as_rational(v))
                except ParseError as exc:
                    raise ParseError(f"intervals[{i}][{j}]: {exc}") from None
            try:
                out.append(make_interval(*vals))
            except BadInterval as exc:
                raise BadInterval(f"intervals[{i}]: {exc}") from None
        return normalize(out)

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def loads(cls, text: str) -> CompactSet1D:
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
        return cls.from_json(obj)


def _merge(raw: list[Interval]) -> tuple[Interval, ...]:
    if not raw:
        raise EmptySet("a compact set needs at least one interval")
    for lo, hi in raw:
        if lo > hi:
            raise BadInterval(f"interval [{lo}, {hi}] has lo > hi")
    raw = sorted(raw)
    out = [raw[0]]
    for lo, hi in raw[1:]:
        last = out[-1]
        if lo <= last.hi:
            if hi > last.hi:
                out[-1] = Interval(last.lo, hi)
        else:
            out.append(Interval(lo, hi))
    return tuple(out)


def normalize(raw: Iterable[Interval | Sequence[RationalLike]]) -> CompactSet1D:
    return CompactSet1D(raw)


def _merge_int(pairs: list[tuple[int, int]]) -> list[tuple[int, int]]:
    pairs.sort()
    out = [list(pairs[0])]
    for lo, hi in pairs:
        last = out[-1]
        if lo <= last[1]:
            if hi > last[1]:
                last[1] = hi
        else:
            out.append([lo, hi])
    return out


def minkowski_sum(a: CompactSet1D, b: CompactSet1D) -> CompactSet1D:
    """{x + y : x in a, y in b}.

    Works on integer numerators over a common denominator: all pairwise
    interval sums are formed, sorted and merged, then mapped back.
    """
    if a.is_point:
        return translate(b, a.min)
    if b.is_point:
        return translate(a, b.min)
    den = 1
    for s in (a, b):
        for lo, hi in s.intervals:
            den = lcm(den, lo.denominator, hi.denominator)
    ai = [(lo.numerator * (den // lo.denominator), hi.numerator * (den // hi.denominator)) for lo, hi in a.intervals]
    bi = [(lo.numerator * (den // lo.denominator), hi.numerator * (den // hi.denominator)) for lo, hi in b.intervals]
    pairs = [(alo + blo, ahi + bhi) for alo, ahi in ai for blo, bhi in bi]
    merged = _merge_int(pairs)
    return CompactSet1D._trusted(tuple(Interval(Fraction(lo, den), Fraction(hi, den)) for lo, hi in merged))


def sum_all(sets: Sequence[CompactSet1D]) -> CompactSet1D:
    if not sets:
        raise EmptySet("cannot sum an empty list of sets")
    total = sets[0]
    for s in sets[1:]:
        total = minkowski_sum(total, s)
    return total


def scale(a: CompactSet1D, m: RationalLike) -> CompactSet1D:
    m = as_rational(m)
    if m <= 0:
        raise NonPositiveScale(f"scale factor must be positive, got {m}")
    return CompactSet1D._trusted(tuple(Interval(lo * m, hi * m) for lo, hi in a.intervals))


def translate(a: CompactSet1D, t: RationalLike) -> CompactSet1D:
    t = as_rational(t)
    if t == 0:
        return a
    return CompactSet1D._trusted(tuple(Interval(lo + t, hi + t) for lo, hi in a.intervals))


def convex_hull(a: CompactSet1D) -> Interval:
    return Interval(a.min, a.max)


def measure(a: CompactSet1D) -> Fraction:
    return sum((hi - lo for lo, hi in a.intervals), Fraction(0))


def contains(a: CompactSet1D, b: CompactSet1D) -> bool:
    """Point-set containment b subset of a."""
    ivs = a.intervals
    i = 0
    for lo, hi in b.intervals:
        while i < len(ivs) and ivs[i].hi < lo:
            i += 1
        if i == len(ivs) or not (ivs[i].lo <= lo and hi <= ivs[i].hi):
            return False
    return True


def equals(a: CompactSet1D, b: CompactSet1D) -> bool:
    return a.intervals == b.intervals


def fill(a: CompactSet1D, extra: Iterable[Interval]) -> CompactSet1D:
    """Union of a with extra intervals clipped to conv(a); stays between a and conv(a)."""
    lo, hi = a.min, a.max
    extra = [make_interval(*x) for x in extra]
    clipped = [Interval(max(x.lo, lo), min(x.hi, hi)) for x in extra if x.hi >= lo and x.lo <= hi]
    return CompactSet1D(list(a.intervals) + clipped)


def load_set(path) -> CompactSet1D:
    with open(path) as fh:
        text = fh.read()
    try:
        return CompactSet1D.loads(text)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def save_set(a: CompactSet1D, path) -> None:
    with open(path, "w") as fh:
        fh.write(a.dumps() + "\n")
