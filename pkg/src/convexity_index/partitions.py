"""Fractional partitions of [m] and the inequalities they index.

Ground elements are 1-indexed, as in the partition file format. A set system
is a tuple of nonempty compact sets (1-D sets or axis-aligned products);
sums over a hyperedge S are memoized per system.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import lcm
from typing import Callable, Iterable, Mapping, Sequence, Union

from .errors import AllSingletons, InvalidPartition, MissingSubset, OutOfRange, ParseError
from .index import ProductSet, product_index, product_sum, schneider_index
from .sets import CompactSet1D, RationalLike, as_rational, measure, minkowski_sum

Member = Union[CompactSet1D, ProductSet]
SUPERMODULAR_MAX_M = 10


@dataclass(frozen=True)
class FractionalPartition:
    m: int
    edges: tuple[tuple[frozenset[int], Fraction], ...]

    def __init__(self, m: int, edges: Iterable[tuple[Iterable[int], RationalLike]]):
        object.__setattr__(self, "m", int(m))
        object.__setattr__(self, "edges", tuple((frozenset(s), as_rational(w)) for s, w in edges))

    @classmethod
    def trivial(cls, m: int) -> FractionalPartition:
        return cls(m, [(range(1, m + 1), 1)])

    @property
    def ground(self) -> frozenset[int]:
        return frozenset(range(1, self.m + 1))

    def positive_edges(self) -> list[tuple[frozenset[int], Fraction]]:
        return [(s, w) for s, w in self.edges if w > 0]

    def is_trivial(self) -> bool:
        pos = self.positive_edges()
        return len(pos) == 1 and pos[0][0] == self.ground and pos[0][1] == 1

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "edges": [{"set": sorted(s), "weight": str(w)} for s, w in self.edges],
        }

    @classmethod
    def from_json(cls, obj) -> FractionalPartition:
        if not isinstance(obj, dict) or "m" not in obj or "edges" not in obj:
            raise ParseError('expected an object with "m" and "edges" fields')
        m = obj["m"]
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise ParseError(f'"m" must be a positive integer, got {m!r}')
        edges = []
        for i, e in enumerate(obj["edges"]):
            if not isinstance(e, dict) or "set" not in e or "weight" not in e:
                raise ParseError(f'edges[{i}]: expected {{"set": [...], "weight": "p/q"}}')
            members = e["set"]
            if not isinstance(members, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in members):
                raise ParseError(f"edges[{i}].set: expected a list of integers")
            try:
                w = as_rational(e["weight"])
            except ParseError as exc:
                raise ParseError(f"edges[{i}].weight: {exc}") from None
            edges.append((members, w))
        return cls(m, edges)


def load_partition(path) -> FractionalPartition:
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    try:
        return FractionalPartition.from_json(obj)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


@dataclass
class ValidationReport:
    ok: bool
    problems: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def validate_partition(p: FractionalPartition) -> ValidationReport:
    problems = []
    if p.m < 1:
        problems.append(f"m must be positive, got {p.m}")
    for s, w in p.edges:
        label = sorted(s)
        if not s:
            problems.append("empty hyperedge")
        elif not s <= p.ground:
            problems.append(f"hyperedge {label} leaves the ground set [1..{p.m}]")
        if w < 0:
            problems.append(f"hyperedge {label} has negative weight {w}")
    for i in range(1, p.m + 1):
        total = sum((w for s, w in p.edges if i in s), Fraction(0))
        if total != 1:
            problems.append(f"element {i} is covered with total weight {total}, not 1")
    return ValidationReport(not problems, problems)


def _require_valid(p: FractionalPartition, m: int | None = None) -> None:
    rep = validate_partition(p)
    if not rep.ok:
        raise InvalidPartition("; ".join(rep.problems))
    if m is not None and p.m != m:
        raise InvalidPartition(f"partition is over [{p.m}] but the set system has {m} sets")


def expand_rational(p: FractionalPartition) -> tuple[int, list[frozenset[int]]]:
    """Clear denominators: returns q and a multiset in which every element lies in exactly q sets."""
    _require_valid(p)
    pos = p.positive_edges()
    q = reduce(lcm, (w.denominator for _, w in pos), 1)
    multiset = []
    for s, w in pos:
        multiset.extend([s] * int(w * q))
    return q, multiset


# ---------------------------------------------------------------------------
# set systems


@dataclass(frozen=True)
class SetSystem:
    sets: tuple[Member, ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __init__(self, sets: Sequence[Member]):
        if not sets:
            raise OutOfRange("a set system needs at least one set")
        object.__setattr__(self, "sets", tuple(sets))
        object.__setattr__(self, "_cache", {})

    @property
    def m(self) -> int:
        return len(self.sets)

    @property
    def is_product(self) -> bool:
        return isinstance(self.sets[0], ProductSet)

    def sumset(self, S: Iterable[int]) -> Member | None:
        """Minkowski sum over the 1-indexed subset S; None for the empty subset."""
        key = frozenset(S)
        if not key:
            return None
        if key not in self._cache:
            members = [self.sets[i - 1] for i in sorted(key)]
            if self.is_product:
                total = product_sum(members)
            else:
                total = reduce(minkowski_sum, members)
            self._cache[key] = total
        return self._cache[key]

    def index(self, S: Iterable[int]) -> Fraction:
        total = self.sumset(S)
        if total is None:
            return Fraction(0)
        return product_index(total) if self.is_product else schneider_index(total)

    def volume(self, S: Iterable[int]) -> Fraction:
        total = self.sumset(S)
        if total is None:
            return Fraction(0)
        return total.volume if self.is_product else measure(total)

    def is_convex_sum(self, S: Iterable[int]) -> bool:
        total = self.sumset(S)
        if total is None:
            return True
        if self.is_product:
            return all(ax.is_interval for ax in total.axes)
        return total.is_interval

    def is_singleton(self, i: int) -> bool:
        s = self.sets[i - 1]
        if isinstance(s, ProductSet):
            return all(ax.is_point for ax in s.axes)
        return s.is_point


@dataclass
class InequalityReport:
    lhs: Fraction
    rhs: Fraction
    holds: bool
    is_equality: bool


def weighted_index_sum(s: SetSystem, p: FractionalPartition) -> Fraction:
    return sum((w * s.index(S) for S, w in p.edges), Fraction(0))


def check_fractional_subadditive_c(s: SetSystem, p: FractionalPartition) -> InequalityReport:
    """c(A_[m]) <= sum_S beta(S) c(A_S)."""
    _require_valid(p, s.m)
    lhs = s.index(range(1, s.m + 1))
    rhs = weighted_index_sum(s, p)
    return InequalityReport(lhs, rhs, lhs <= rhs, lhs == rhs)


def check_fractional_superadditive_measure(s: SetSystem, p: FractionalPartition) -> InequalityReport:
    """|A_[m]| >= sum_S beta(S) |A_S|."""
    _require_valid(p, s.m)
    lhs = s.volume(range(1, s.m + 1))
    rhs = sum((w * s.volume(S) for S, w in p.edges), Fraction(0))
    return InequalityReport(lhs, rhs, lhs >= rhs, lhs == rhs)


def translated_partition(s: SetSystem, p: FractionalPartition) -> tuple[SetSystem, FractionalPartition]:
    """Drop the single-point sets and push the partition onto the survivors.

    Edges whose images coincide have their weights summed; edges that lose
    every element are discarded. By translation invariance of the index the
    weighted index sum is unchanged.
    """
    _require_valid(p, s.m)
    survivors = [i for i in range(1, s.m + 1) if not s.is_singleton(i)]
    if not survivors:
        raise AllSingletons("every set is a single point; there is nothing to translate onto")
    if len(survivors) == s.m:
        return s, p
    relabel = {old: new for new, old in enumerate(survivors, start=1)}
    merged: dict[frozenset[int], Fraction] = {}
    order = []
    for S, w in p.edges:
        image = frozenset(relabel[i] for i in S if i in relabel)
        if not image:
            continue
        if image not in merged:
            merged[image] = Fraction(0)
            order.append(image)
        merged[image] += w
    new_system = SetSystem([s.sets[i - 1] for i in survivors])
    return new_system, FractionalPartition(len(survivors), [(img, merged[img]) for img in order])


def equality_condition(s: SetSystem, p: FractionalPartition) -> str | None:
    """Which one-dimensional equality condition applies, if any.

    Returns "trivial" when the translated partition is trivial (or every set is
    a point), "intervals" when it is nontrivial and every positively weighted
    hyperedge sums to an interval, and None otherwise.
    """
    _require_valid(p, s.m)
    try:
        _, tp = translated_partition(s, p)
    except AllSingletons:
        return "trivial"
    if tp.is_trivial():
        return "trivial"
    if all(s.is_convex_sum(S) for S, w in p.edges if w > 0):
        return "intervals"
    return None


# ---------------------------------------------------------------------------
# supermodularity


def all_subsets(m: int) -> list[frozenset[int]]:
    ground = range(1, m + 1)
    return [frozenset(c) for k in range(m + 1) for c in combinations(ground, k)]


def set_function(s: SetSystem, f: Callable[[SetSystem, frozenset[int]], Fraction]) -> dict[frozenset[int], Fraction]:
    return {S: f(s, S) for S in all_subsets(s.m)}


def volume_function(s: SetSystem) -> dict[frozenset[int], Fraction]:
    return set_function(s, SetSystem.volume)


def index_function(s: SetSystem) -> dict[frozenset[int], Fraction]:
    return set_function(s, SetSystem.index)


@dataclass
class ModularityReport:
    holds: bool
    mode: str
    violation: tuple[frozenset[int], frozenset[int]] | None = None
    pairs_checked: int = 0


def check_supermodular(v: Mapping[frozenset[int], Fraction], m: int, mode: str = "super") -> ModularityReport:
    """f(S u T) + f(S n T) >= f(S) + f(T) for all S, T (flipped for mode="sub")."""
    if mode not in ("super", "sub"):
        raise OutOfRange(f'mode must be "super" or "sub", got {mode!r}')
    if not 1 <= m <= SUPERMODULAR_MAX_M:
        raise OutOfRange(f"m must lie in [1, {SUPERMODULAR_MAX_M}], got {m}")
    subsets = all_subsets(m)
    vals = {}
    for S in subsets:
        if S not in v:
            raise MissingSubset(f"no value for subset {sorted(S)}")
        vals[S] = as_rational(v[S])
    if vals[frozenset()] != 0:
        raise OutOfRange(f"the empty set must map to 0, got {vals[frozenset()]}")
    checked = 0
    for i, S in enumerate(subsets):
        for T in subsets[i + 1:]:
            checked += 1
            left = vals[S | T] + vals[S & T]
            right = vals[S] + vals[T]
            ok = left >= right if mode == "super" else left <= right
            if not ok:
                return ModularityReport(False, mode, (S, T), checked)
    return ModularityReport(True, mode, None, checked)


@dataclass
class StrongBoundReport:
    lhs: Fraction
    rhs: Fraction
    holds: bool
    union_pairs_checked: int
    union_violation: tuple[frozenset[int], frozenset[int]] | None


def strong_bound_check(a: CompactSet1D, b: CompactSet1D, c: CompactSet1D) -> StrongBoundReport:
    """c(a+b+c) <= max(c(a+b), c(b+c)), plus the union form over all S, T of {1, 2, 3}."""
    s = SetSystem([a, b, c])
    lhs = s.index({1, 2, 3})
    rhs = max(s.index({1, 2}), s.index({2, 3}))
    nonempty = [S for S in all_subsets(3) if S]
    checked = 0
    violation = None
    for S in nonempty:
        for T in nonempty:
            checked += 1
            if s.index(S | T) > max(s.index(S), s.index(T)):
                violation = (S, T)
                break
        if violation:
            break
    return StrongBoundReport(lhs, rhs, lhs <= rhs and violation is None, checked, violation)
