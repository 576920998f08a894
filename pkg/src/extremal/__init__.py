"""Counting, closed-form bounds and extremal constructions."""
from .constructions import LabeledConstruction, build_F, build_H, sharpness_construction
from .counting import CopyCount, binomial, count_kst, count_kst_oracle
from .formulas import (
    check_discrete_convexity,
    eval_f,
    eval_g,
    threshold_cycle_bipartite,
    threshold_cycle_general,
    threshold_matching_bipartite,
    threshold_path_bipartite,
    threshold_path_general,
)

__all__ = [
    "LabeledConstruction",
    "build_F",
    "build_H",
    "sharpness_construction",
    "CopyCount",
    "binomial",
    "count_kst",
    "count_kst_oracle",
    "check_discrete_convexity",
    "eval_f",
    "eval_g",
    "threshold_cycle_bipartite",
    "threshold_cycle_general",
    "threshold_matching_bipartite",
    "threshold_path_bipartite",
    "threshold_path_general",
]
