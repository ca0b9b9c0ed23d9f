"""Largest gap, diameter and the Schneider non-convexity index.

In one dimension the index reduces to ``largest_gap / diam``. For axis-aligned
products the index of the product (and of sums of products) is the maximum
over axes, so nothing n-dimensional is ever materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, EmptyList
from .sets import CompactSet1D, measure, sum_all


@dataclass(frozen=True)
class ProductSet:
    """Cartesian product axes[0] x axes[1] x ... in R^n."""

    axes: tuple[CompactSet1D, ...]

    def __init__(self, axes: Sequence[CompactSet1D]):
        if len(axes) == 0:
            raise EmptyList("a product set needs at least one axis")
        object.__setattr__(self, "axes", tuple(axes))

    @property
    def dim(self) -> int:
        return len(self.axes)

    @property
    def volume(self) -> Fraction:
        v = Fraction(1)
        for ax in self.axes:
            v *= measure(ax)
        return v


def largest_gap(a: CompactSet1D) -> Fraction:
    return max(a.gaps(), default=Fraction(0))


def diameter(a: CompactSet1D) -> Fraction:
    return a.diam


def schneider_index(a: CompactSet1D) -> Fraction:
    # a single point is convex: index 0 rather than 0/0
    d = a.diam
    if d == 0:
        return Fraction(0)
    return largest_gap(a) / d


def sum_index(sets: Sequence[CompactSet1D]) -> Fraction:
    if not sets:
        raise EmptyList("sum_index needs at least one set")
    return schneider_index(sum_all(list(sets)))


def product_index(p: ProductSet) -> Fraction:
    return max(schneider_index(ax) for ax in p.axes)


def product_sum(ps: Sequence[ProductSet]) -> ProductSet:
    if not ps:
        raise EmptyList("product_sum needs at least one product set")
    n = ps[0].dim
    for p in ps:
        if p.dim != n:
            raise DimensionMismatch(f"product sets of dimension {n} and {p.dim} cannot be added")
    return ProductSet([sum_all([p.axes[i] for p in ps]) for i in range(n)])


def product_sum_index(ps: Sequence[ProductSet]) -> Fraction:
    return product_index(product_sum(ps))


def hausdorff_to_hull(a: CompactSet1D) -> Fraction:
    """Hausdorff distance from a to conv(a): half the largest gap."""
    return largest_gap(a) / 2
