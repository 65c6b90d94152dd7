"""Brute-force iteration oracles and floating-point trajectory sampling.

The k-step iterations compute the exact reach / null-controllable truncations
H^l(0) and the feasible-set truncations by repeated cone images; saturation
is detected by exact cone equality. Trajectory sampling is the only place in
the library that emits floating point, and only as display output: each step
is selected by an exact feasibility LP over the current graph section with a
seeded random rational objective.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .cones import PolyhedralCone
from .lp import LPStatus, solve_lp
from .process import ConvexProcess
from .rational import RatLike, vec_dot, vector


class Direction(Enum):
    REACH = "reach"
    NULL = "null"


INFEASIBLE = "INFEASIBLE"


@dataclass
class IterationResult:
    cones: list[PolyhedralCone]   # C_0 .. C_k
    saturated_at: int | None      # first l with C_l = C_{l+1}, if within k


def k_step_set(process: ConvexProcess, k: int,
               direction: Direction = Direction.REACH) -> IterationResult:
    """Nested truncations C_l = H^l(0) (or the inverse process for NULL)."""
    if k < 0:
        raise ValueError("step count must be nonnegative")
    work = process.inverse() if direction is Direction.NULL else process
    cones = [PolyhedralCone.zero(process.n)]
    saturated_at = None
    for step in range(k):
        nxt = work.apply_cone(cones[-1])
        cones.append(nxt)
        if nxt.set_equals(cones[-2]):
            saturated_at = step
            break
    while len(cones) < k + 1:  # the chain is constant after saturation
        cones.append(cones[-1])
    return IterationResult(cones, saturated_at)


def feasible_k(process: ConvexProcess, k: int) -> PolyhedralCone:
    """F_k: states admitting a k-step trajectory (decreasing in k)."""
    if k < 0:
        raise ValueError("step count must be nonnegative")
    inverse = process.inverse()
    current = PolyhedralCone.full(process.n)
    for _ in range(k):
        nxt = inverse.apply_cone(current)
        if nxt.set_equals(current):
            break
        current = nxt
    return current


def feasible_chain(process: ConvexProcess, k: int) -> IterationResult:
    """F_0 .. F_k with saturation index, for reporting."""
    if k < 0:
        raise ValueError("step count must be nonnegative")
    inverse = process.inverse()
    cones = [PolyhedralCone.full(process.n)]
    saturated_at = None
    for step in range(k):
        nxt = inverse.apply_cone(cones[-1])
        cones.append(nxt)
        if nxt.set_equals(cones[-2]):
            saturated_at = step
            break
    while len(cones) < k + 1:
        cones.append(cones[-1])
    return IterationResult(cones, saturated_at)


def sample_trajectory(process: ConvexProcess, x0: Sequence[RatLike],
                      k: int, seed: int = 0):
    """Greedy trajectory of length k from x0, or INFEASIBLE at an empty section.

    Each step solves an exact feasibility LP over the section
    {y : (x, y) in graph} with a random rational objective (seeded), bounded
    by an adaptive box around a feasible point; output is float-valued for
    display only, while the iteration itself stays rational.
    """
    rng = random.Random(seed)
    n = process.n
    x = vector(x0)
    if len(x) != n:
        raise ValueError("initial state has wrong dimension")
    g = process.graph
    points = [x]
    for _ in range(k):
        ineq_rows = [list(w[n:]) for w in g.ineqs]
        ineq_rhs = [-vec_dot(w[:n], x) for w in g.ineqs]
        eq_rows = [list(e[n:]) for e in g.eqs]
        eq_rhs = [-vec_dot(e[:n], x) for e in g.eqs]
        if not ineq_rows and not eq_rows:
            base = [Fraction(0)] * n
        else:
            from .lp import feasible_point
            base = feasible_point(ineq_rows, ineq_rhs, eq_rows, eq_rhs)
            if base is None:
                return INFEASIBLE
        # random objective over a box certain to contain the feasible point
        bound = max((abs(v) for v in base), default=Fraction(0)) + 1
        box_rows, box_rhs = [], []
        for i in range(n):
            e = [Fraction(0)] * n
            e[i] = Fraction(1)
            box_rows.append(list(e))
            box_rhs.append(bound)
            box_rows.append([-v for v in e])
            box_rhs.append(bound)
        objective = [Fraction(rng.randint(-9, 9)) for _ in range(n)]
        res = solve_lp(objective, ineq_rows + box_rows, ineq_rhs + box_rhs,
                       eq_rows, eq_rhs)
        assert res.status is LPStatus.OPTIMAL
        x = tuple(res.x)
        points.append(x)
    return [[float(v) for v in p] for p in points]
