from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from convexity_index.bounds import lower_bound_L, upper_bound_M
from convexity_index.errors import BadOrdering, DimensionTooSmall, KTooSmall, NegativeInput, NotMember, ParseError
from convexity_index.index import product_sum_index, schneider_index, sum_index
from convexity_index.regions import (
    Piece,
    RegionPoint,
    FractalParams,
    choose_fractal_params,
    exact_nth_root,
    fractal_lyusternik3_witness,
    integer_nth_root,
    lyusternik_limit_excluded,
    lyusternik_membership_L2,
    non_closedness_limit,
    non_closedness_sequence,
    partial_char_Sn2,
    partial_char_witness_Sn2,
    region_point_of,
    schneider_membership_S12,
    schneider_witness_S12,
)
from convexity_index.bounds import annulus_sum_index
from convexity_index.sets import measure
from helpers import compact_sets

GRID = [F(j, 6) for j in range(7)]


class TestS12Membership:
    def test_examples(self):
        assert schneider_membership_S12(1, 1, F(1, 3)).piece is Piece.BOTH
        assert schneider_membership_S12(F(1, 2), 0, F(1, 2)).piece is Piece.FIRST
        assert schneider_membership_S12(0, F(1, 2), F(1, 2)).piece is Piece.SECOND
        mem = schneider_membership_S12(1, 1, 1)
        assert not mem and mem.reason == "c12 ∈ [1/3, 1) required"

    def test_origin(self):
        assert schneider_membership_S12(0, 0, 0).piece is Piece.EMPTY
        assert not schneider_membership_S12(0, 0, F(1, 2))

    def test_outside_unit_square(self):
        assert not schneider_membership_S12(F(3, 2), 0, F(3, 2))

    def test_negative(self):
        with pytest.raises(NegativeInput):
            schneider_membership_S12(-1, 0, 0)

    @given(compact_sets(), compact_sets())
    def test_sound_against_engine(self, a, b):
        assert schneider_membership_S12(schneider_index(a), schneider_index(b), sum_index([a, b]))


def s12_grid_points():
    for c1, c2 in product(GRID, GRID):
        if upper_bound_M(c1, c2) == 0:
            continue
        L, M = lower_bound_L(c1, c2), upper_bound_M(c1, c2)
        for t in range(6):
            yield c1, c2, L + (M - L) * F(t, 6)


class TestS12Witness:
    @pytest.mark.parametrize("c1,c2,c12", list(s12_grid_points()))
    def test_round_trip_on_grid(self, c1, c2, c12):
        a, b = schneider_witness_S12(c1, c2, c12)
        assert (schneider_index(a), schneider_index(b), sum_index([a, b])) == (c1, c2, c12)

    def test_examples(self):
        a, b = schneider_witness_S12(1, 1, F(1, 3))
        assert sum_index([a, b]) == F(1, 3)
        a, b = schneider_witness_S12(F(1, 3), F(1, 3), F(1, 4))
        assert sum_index([a, b]) == F(1, 4)
        a, b = schneider_witness_S12(F(2, 5), 0, F(2, 5))
        assert schneider_index(a) == F(2, 5) and b.is_point

    def test_not_member(self):
        with pytest.raises(NotMember):
            schneider_witness_S12(1, 1, 1)

    @given(st.integers(0, 30), st.integers(0, 30), st.integers(0, 29))
    def test_round_trip_random(self, i, j, t):
        c1, c2 = F(i, 30), F(j, 30)
        if upper_bound_M(c1, c2) == 0:
            return
        L, M = lower_bound_L(c1, c2), upper_bound_M(c1, c2)
        c12 = L + (M - L) * F(t, 30)
        a, b = schneider_witness_S12(c1, c2, c12)
        assert (schneider_index(a), schneider_index(b), sum_index([a, b])) == (c1, c2, c12)


class TestLyusternik2:
    def test_examples(self):
        assert lyusternik_membership_L2(1, 1, 1, 2)
        assert not lyusternik_membership_L2(1, 1, 1, F(3, 2))
        assert lyusternik_membership_L2(2, 1, 1, 4)
        assert not lyusternik_membership_L2(2, 1, 1, F(3999, 1000))

    def test_perfect_power_boundary(self):
        # a/b = 8 = 2^3: threshold b (1 + 2)^3 = 27 b
        assert lyusternik_membership_L2(3, 8, 1, 27)
        assert not lyusternik_membership_L2(3, 8, 1, F(26999, 1000))
        assert lyusternik_membership_L2(2, F(4, 9), F(1, 9), 1)

    def test_irrational_threshold(self):
        # (1 + sqrt 2)^2 = 3 + 2 sqrt 2 = 5.828427...
        assert lyusternik_membership_L2(2, 1, 2, F(5828428, 10**6))
        assert not lyusternik_membership_L2(2, 1, 2, F(5828427, 10**6))

    def test_zero_volume(self):
        assert lyusternik_membership_L2(3, 0, 5, 5) and not lyusternik_membership_L2(3, 5, 0, F(49, 10))

    def test_errors(self):
        with pytest.raises(NegativeInput):
            lyusternik_membership_L2(2, -1, 1, 1)
        with pytest.raises(DimensionTooSmall):
            lyusternik_membership_L2(0, 1, 1, 1)

    @given(compact_sets(), compact_sets())
    def test_engine_pairs_in_dimension_one(self, a, b):
        assert lyusternik_membership_L2(1, measure(a), measure(b), measure(a + b))

    @given(st.integers(1, 40), st.integers(1, 40), st.integers(2, 4), st.integers(0, 3000))
    def test_agrees_with_high_precision_float(self, a, b, n, c):
        import mpmath

        mpmath.mp.dps = 60
        c = F(c, 10)
        thr = (mpmath.root(a, n) + mpmath.root(b, n)) ** n
        if abs(thr - mpmath.mpf(c.numerator) / c.denominator) < mpmath.mpf(10) ** -40:
            return
        assert lyusternik_membership_L2(n, a, b, c) == (mpmath.mpf(c.numerator) / c.denominator >= thr)

    @given(st.integers(0, 10**12), st.integers(1, 6))
    def test_integer_root(self, x, n):
        y = integer_nth_root(x, n)
        assert y**n <= x < (y + 1) ** n

    def test_exact_root(self):
        assert exact_nth_root(F(8, 27), 3) == F(2, 3)
        assert exact_nth_root(F(2), 2) is None


class TestPartialCharacterization:
    def test_examples(self):
        assert partial_char_Sn2(2, F(1, 2), F(1, 3), F(1, 2))
        assert not partial_char_Sn2(2, F(1, 2), F(1, 3), F(3, 5))
        with pytest.raises(DimensionTooSmall):
            partial_char_Sn2(1, 0, 0, 0)

    @pytest.mark.parametrize("c1,c2,c12", [(F(1, 2), F(1, 3), F(1, 2)), (F(1, 2), F(1, 3), F(1, 5)), (0, 0, 0), (1, 1, 0)])
    def test_witness(self, c1, c2, c12):
        kind, data = partial_char_witness_Sn2(c1, c2, c12)
        if kind == "annulus":
            assert annulus_sum_index(max(c1, c2), data) == c12
        else:
            assert product_sum_index(list(data)) == c12


class TestRegionPoint:
    def test_vector_order_and_json(self):
        p = non_closedness_sequence(2)
        assert p.vector() == (0, 0, 0, 0, 0, F(1, 2), F(1, 2), 1)
        js = p.to_json()
        assert list(js["values"]) == ["1", "2", "3", "1,2", "1,3", "2,3", "1,2,3"]
        assert RegionPoint.from_json(js) == p

    def test_negative_rejected(self):
        with pytest.raises(NegativeInput):
            RegionPoint(2, {frozenset({1}): -1})
        with pytest.raises(ParseError):
            RegionPoint.from_json({"m": 2})

    def test_sequence(self):
        assert non_closedness_sequence(10).vector()[-3:] == (F(9, 10), F(9, 10), 1)
        with pytest.raises(KTooSmall):
            non_closedness_sequence(1)

    def test_limit_excluded_and_sequence_not(self):
        excluded, reason = lyusternik_limit_excluded(non_closedness_limit())
        assert excluded and "point" in reason
        for k in range(2, 11):
            assert not lyusternik_limit_excluded(non_closedness_sequence(k))[0]
        alpha = F(3, 7)
        t = frozenset
        diag = RegionPoint(3, {t({1}): 0, t({2}): 0, t({3}): 0, t({1, 2}): 0, t({1, 3}): alpha, t({2, 3}): alpha, t({1, 2, 3}): alpha})
        assert lyusternik_limit_excluded(diag)[0]

    @given(compact_sets(3), compact_sets(3), compact_sets(3))
    def test_engine_points_never_excluded(self, a, b, c):
        assert not lyusternik_limit_excluded(region_point_of([a, b, c]))[0]


class TestFractalWitness:
    def test_parameters(self):
        assert choose_fractal_params(F(1), F(2)) == FractalParams(4, 1, 2)
        p = choose_fractal_params(F(1), F(10, 9))
        assert p.N == 11 and p.k1 + p.k2 == p.N - 1 and F(p.k1, p.N - 1) < F(1, 9)

    @given(st.integers(1, 40), st.integers(1, 40))
    def test_parameter_constraints(self, num, den):
        a, b = F(1), 1 + F(num, den)
        p = choose_fractal_params(a, b)
        assert p.k1 + p.k2 == p.N - 1 and 0 < 2 * p.k1 < p.N - 1 and F(p.k1, p.N - 1) + a < b
        if p.N > 4:
            assert not F(1, p.N - 2) < b - a

    def test_bad_ordering(self):
        with pytest.raises(BadOrdering):
            fractal_lyusternik3_witness(1, 1, 1, 2)
        with pytest.raises(BadOrdering):
            fractal_lyusternik3_witness(2, 1, 3, 2)

    @pytest.mark.parametrize("alphas,depth", [((1, 1, 2), 3), ((1, 1, 2), 4), ((1, F(3, 2), F(7, 2)), 3), ((F(1, 2), 1, F(5, 4)), 3)])
    def test_predicted_and_bounds(self, alphas, depth):
        w = fractal_lyusternik3_witness(*alphas, depth)
        a13 = F(alphas[0])
        for S, v in w.predicted.items():
            assert w.achieved[S] == a13 * v, S
        for S, v in w.upper.items():
            assert w.achieved[S] <= a13 * v, S
        eps = F(1, w.params.N**depth)
        assert w.fractal_component_13 == 1 + eps

    def test_deficits_shrink_with_depth(self):
        prev = None
        for d in range(2, 6):
            w = fractal_lyusternik3_witness(1, 1, 2, d)
            gaps = [abs(x - y) for x, y in zip(w.achieved.vector(), w.target.vector())]
            if prev is not None:
                assert all(g <= p for g, p in zip(gaps, prev))
            prev = gaps
