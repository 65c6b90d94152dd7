"""Exact reachability and null-controllability analysis for polyhedral convex processes."""

__version__ = "0.1.0"

from .analysis import (
    Property, Result, Verdict, check_assumptions, check_null_controllability,
    check_reachability,
)
from .cones import PolyhedralCone, fm_project
from .linreach import reach_subspace
from .oracle import Direction, INFEASIBLE, feasible_k, k_step_set, sample_trajectory
from .process import ConvexProcess, LinearProcess
from .rational import Rat, RatMatrix, Subspace, kernel, rat, rat_str, rref
from .spectral import (
    EigenConstraint, EigenReport, EigenStatus, cone_nontrivial_at, eigen_exists,
)

__all__ = [
    "ConvexProcess", "Direction", "EigenConstraint", "EigenReport",
    "EigenStatus", "INFEASIBLE", "LinearProcess", "PolyhedralCone",
    "Property", "Rat", "RatMatrix", "Result", "Subspace", "Verdict",
    "check_assumptions", "check_null_controllability", "check_reachability",
    "cone_nontrivial_at", "eigen_exists", "feasible_k", "fm_project",
    "k_step_set", "kernel", "rat", "rat_str", "reach_subspace", "rref",
    "sample_trajectory",
]
