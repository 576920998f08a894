"""Structural procedures: cores, closures, exact long-cycle solvers, Pósa bounds."""
from .closure import closure_long_cycle, closure_violations
from .cores import CoreTrace, core
from .matching import HopcroftKarp, max_matching
from .paths import (
    circumference,
    has_cycle_at_least,
    has_cycle_of_length,
    has_path_at_least,
    longest_path_between,
    longest_path_order,
)
from .posa import bipartite_posa_bound, posa_bound

__all__ = [
    "closure_long_cycle",
    "closure_violations",
    "CoreTrace",
    "core",
    "HopcroftKarp",
    "max_matching",
    "circumference",
    "has_cycle_at_least",
    "has_cycle_of_length",
    "has_path_at_least",
    "longest_path_between",
    "longest_path_order",
    "bipartite_posa_bound",
    "posa_bound",
]
