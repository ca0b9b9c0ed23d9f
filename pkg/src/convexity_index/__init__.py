"""Exact computations with the Schneider non-convexity index of compact sets on the line."""

from .bounds import (
    balanced_set,
    induced_index_cstar,
    ksum_candidate_bound,
    lower_bound_L,
    r_of_c,
    tight_witness_pair,
    upper_bound_M,
)
from .index import ProductSet, largest_gap, product_sum_index, schneider_index, sum_index
from .sets import CompactSet1D, Interval, measure, minkowski_sum, normalize, scale, translate

__all__ = [
    "CompactSet1D",
    "Interval",
    "ProductSet",
    "balanced_set",
    "induced_index_cstar",
    "ksum_candidate_bound",
    "largest_gap",
    "lower_bound_L",
    "measure",
    "minkowski_sum",
    "normalize",
    "product_sum_index",
    "r_of_c",
    "scale",
    "schneider_index",
    "sum_index",
    "tight_witness_pair",
    "translate",
    "upper_bound_M",
]
