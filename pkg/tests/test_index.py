from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from convexity_index.errors import DimensionMismatch, EmptyList
from convexity_index.index import (
    ProductSet,
    hausdorff_to_hull,
    largest_gap,
    product_index,
    product_sum_index,
    schneider_index,
    sum_index,
)
from convexity_index.sets import CompactSet1D, fill, minkowski_sum, scale, translate
from helpers import compact_sets, naive_index, naive_sum, rationals


def S(*pairs):
    return CompactSet1D(pairs)


def pts(*xs):
    return CompactSet1D.points(xs)


A = S((0, 1), (2, 3))


def test_largest_gap_examples():
    assert largest_gap(A) == 1
    assert largest_gap(S((0, 1))) == 0
    assert largest_gap(pts(0, 1, 2, 10)) == 8


def test_index_examples():
    assert schneider_index(A) == F(1, 3)
    assert schneider_index(pts(0, 1)) == 1
    assert schneider_index(S((0, F(1, 2)), (1, F(3, 2)))) == F(1, 3)
    assert schneider_index(pts(7)) == 0


def test_sum_index_examples():
    assert sum_index([pts(0, 1), pts(0, 2)]) == F(1, 3)
    assert sum_index([S((0, 1)), S((0, 1))]) == 0
    assert sum_index([pts(0, 1)] * 3) == F(1, 3)
    with pytest.raises(EmptyList):
        sum_index([])


def test_product_examples():
    assert product_index(ProductSet([A, S((0, 1))])) == F(1, 3)
    assert product_index(ProductSet([pts(0, 1), pts(0, 1)])) == 1
    assert product_index(ProductSet([S((0, 1))])) == 0
    with pytest.raises(EmptyList):
        ProductSet([])


def test_product_sum_examples():
    B = S((0, 1))
    assert product_sum_index([ProductSet([A, pts(0)]), ProductSet([pts(0), B])]) == F(1, 3)
    # {0,1} + {0,1} = {0,1,2}: gap 1 over diameter 2
    assert product_sum_index([ProductSet([pts(0, 1)]), ProductSet([pts(0, 1)])]) == F(1, 2)
    P = ProductSet([A, B])
    assert product_sum_index([P]) == product_index(P)
    with pytest.raises(DimensionMismatch):
        product_sum_index([ProductSet([A]), ProductSet([A, B])])


def test_hausdorff_to_hull():
    assert hausdorff_to_hull(A) == F(1, 2)
    assert hausdorff_to_hull(S((0, 1))) == 0
    assert hausdorff_to_hull(pts(0, 4)) == 2


@given(compact_sets())
def test_index_range_and_extremes(a):
    c = schneider_index(a)
    assert 0 <= c <= 1
    assert (c == 0) == (a.is_interval or a.is_point)
    assert (c == 1) == (len(a.intervals) == 2 and all(iv.lo == iv.hi for iv in a.intervals))


@given(compact_sets())
def test_index_matches_naive(a):
    assert schneider_index(a) == naive_index(list(a.intervals))


@given(compact_sets(), rationals(-4, 4), st.integers(1, 9), st.integers(1, 9))
def test_index_affine_invariant(a, t, p, q):
    assert schneider_index(translate(scale(a, F(p, q)), t)) == schneider_index(a)


@given(compact_sets(), compact_sets())
def test_sum_index_matches_naive(a, b):
    assert sum_index([a, b]) == naive_index(naive_sum(a, b))


@given(compact_sets(), compact_sets())
def test_sum_below_max(a, b):
    assert sum_index([a, b]) <= max(schneider_index(a), schneider_index(b))


@given(compact_sets(3), compact_sets(3), compact_sets(3))
def test_three_set_bound(a, b, c):
    assert sum_index([a, b, c]) <= max(sum_index([a, b]), sum_index([b, c]))


@given(compact_sets(), compact_sets(), st.data())
def test_filling_gaps_never_raises_index(a, b, data):
    assume(a.gaps())
    # fill a random sub-interval of some gap of a
    i = data.draw(st.integers(0, len(a.intervals) - 2))
    lo, hi = a.intervals[i].hi, a.intervals[i + 1].lo
    t1 = data.draw(st.integers(0, 12))
    t2 = data.draw(st.integers(t1, 12))
    filler = (lo + (hi - lo) * F(t1, 12), lo + (hi - lo) * F(t2, 12))
    a2 = fill(a, [filler])
    assert sum_index([a2, b]) <= sum_index([a, b])


@given(st.lists(st.tuples(compact_sets(3), compact_sets(3)), min_size=1, max_size=3))
def test_product_sum_matches_axiswise_sums(axes):
    p1 = ProductSet([x for x, _ in axes])
    p2 = ProductSet([y for _, y in axes])
    expected = max(schneider_index(minkowski_sum(x, y)) for x, y in axes)
    assert product_sum_index([p1, p2]) == expected
