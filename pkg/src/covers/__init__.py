"""Cyclic covers: weight maps, Schreier bases and lifting of curves."""

from src.covers.schreier import (
    Lifts,
    SchreierData,
    deck_transform,
    expand_to_base,
    lifts_of,
    rewrite_in_kernel,
    schreier_basis,
)
from src.covers.weights import WeightMap, coset_of, infer_weights, weight_sum

__all__ = [
    "Lifts",
    "SchreierData",
    "WeightMap",
    "coset_of",
    "deck_transform",
    "expand_to_base",
    "infer_weights",
    "lifts_of",
    "rewrite_in_kernel",
    "schreier_basis",
    "weight_sum",
]
