"""Splitting descriptions, slope arithmetic, weak reduction and cutting."""

from src.splittings.reduction import NotFound, WeakReduction, cut_along, find_weak_reduction, omit_and_cut
from src.splittings.splitting import (
    CoverSide,
    Family,
    SlopeParam,
    SplittingFile,
    SplittingSpec,
    build_cover_side,
    drop_slope,
    lift_slope,
    load_splitting,
    slope_curve,
    spec_from_model,
    twist_family,
)
from src.splittings.validators import validate_splitting

__all__ = [
    "CoverSide",
    "Family",
    "NotFound",
    "SlopeParam",
    "SplittingFile",
    "SplittingSpec",
    "WeakReduction",
    "build_cover_side",
    "cut_along",
    "drop_slope",
    "find_weak_reduction",
    "lift_slope",
    "load_splitting",
    "omit_and_cut",
    "slope_curve",
    "spec_from_model",
    "twist_family",
    "validate_splitting",
]
