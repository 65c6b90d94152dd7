"""Exact two-phase simplex over free variables.

Solves max c.x subject to A x <= b, E x = d with no scaling and no
tolerances: every pivot decision is an exact sign test, so the reported
status is a theorem about the input. Pivoting starts with Dantzig's rule and
switches permanently to Bland's rule after a pivot budget, which keeps the
usual speed while making termination unconditional.

The implementation is generic over the scalar field: any type supporting
+, -, *, / and comparisons against 0 works. In practice this is
``fractions.Fraction`` for rational data and ``polynomials.AlgElem`` when a
linear program has to be solved over Q(alpha) at an algebraic breakpoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence


class LPStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: LPStatus
    value: object | None  # objective value at the optimum
    x: list | None        # optimizer in the original (free) variables


def _field_converter(*groups):
    """Map plain ints/Fractions into the scalar field of the problem data.

    Division of two ints would fall back to float division, so everything is
    normalized to Fraction, unless an algebraic element is present, in which
    case all scalars are lifted into its Q(alpha) context.
    """
    from .polynomials import AlgElem  # deferred to keep this module import-light

    for group in groups:
        for item in group:
            values = item if isinstance(item, (list, tuple)) else [item]
            for v in values:
                if isinstance(v, AlgElem):
                    ctx = v.ctx
                    return lambda x: x if isinstance(x, AlgElem) else ctx.from_rat(x)
    return lambda x: x if isinstance(x, Fraction) else Fraction(x)


class _Tableau:
    """Dense simplex tableau with exact pivoting."""

    def __init__(self, rows, basis, zero):
        self.rows = rows          # each row: coefficients + rhs
        self.basis = basis        # basic column per row
        self.zero = zero
        self.pivots = 0

    def pivot(self, r: int, c: int) -> None:
        rows = self.rows
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        piv_row = rows[r]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f != 0:
                    rows[i] = [x - f * y for x, y in zip(rows[i], piv_row)]
        self.basis[r] = c
        self.pivots += 1

    def minimize(self, cost, allowed_cols, bland_after: int = 200):
        """Minimize cost over the current basis; returns (objective_row, bounded)."""
        rows = self.rows
        basis = self.basis
        obj = [-c for c in cost] + [self.zero]
        for r, b in enumerate(basis):
            f = obj[b]
            if f != 0:
                obj = [x - f * y for x, y in zip(obj, rows[r])]
        steps = 0
        while True:
            enter = None
            if steps < bland_after:  # Dantzig: most positive reduced cost
                best_val = None
                for j in allowed_cols:
                    v = obj[j]
                    if v > 0 and (best_val is None or v > best_val):
                        best_val = v
                        enter = j
            else:  # Bland: smallest eligible index, guaranteed termination
                for j in allowed_cols:
                    if obj[j] > 0:
                        enter = j
                        break
            if enter is None:
                return obj, True
            leave = None
            best = None
            for i in range(len(rows)):
                coef = rows[i][enter]
                if coef > 0:
                    ratio = rows[i][-1] / coef
                    if best is None or ratio < best or \
                            (ratio == best and basis[i] < basis[leave]):
                        best = ratio
                        leave = i
            if leave is None:
                return obj, False  # unbounded direction
            self.pivot(leave, enter)
            f = obj[enter]
            if f != 0:
                obj = [x - f * y for x, y in zip(obj, rows[leave])]
            steps += 1


def _prepare(n: int, conv, ineq_rows, ineq_rhs, eq_rows, eq_rhs):
    """Build the standard-form tableau with a feasible basis.

    Returns (tableau, n_struct, zero) or None when the constraints are
    infeasible. Standard form: x = u - v with u, v >= 0 and one slack per
    inequality. A slack can start basic only on an inequality whose rhs is
    nonnegative; the other rows (flipped inequalities and equalities) get
    artificials, and phase 1 runs only when artificials exist.
    """
    rows = [[conv(x) for x in r] for r in ineq_rows] + [[conv(x) for x in r] for r in eq_rows]
    rhs = [conv(b) for b in ineq_rhs] + [conv(b) for b in eq_rhs]
    n_ineq = len(ineq_rows)
    m = len(rows)
    for r in rows:
        if len(r) != n:
            raise ValueError("constraint row length mismatch")
    zero, one = conv(0), conv(1)

    art_rows = [i for i in range(m) if rhs[i] < 0 or i >= n_ineq]
    n_struct = 2 * n + n_ineq
    total_cols = n_struct + len(art_rows)

    tableau_rows = []
    for i in range(m):
        row = [zero] * (total_cols + 1)
        flip = rhs[i] < 0
        sign = -one if flip else one
        for j in range(n):
            coef = rows[i][j]
            if coef != 0:
                row[j] = sign * coef
                row[n + j] = -row[j]
        if i < n_ineq:
            row[2 * n + i] = sign
        row[-1] = sign * rhs[i]
        tableau_rows.append(row)
    basis = [None] * m
    for k, i in enumerate(art_rows):
        tableau_rows[i][n_struct + k] = one
        basis[i] = n_struct + k
    for i in range(m):
        if basis[i] is None:
            basis[i] = 2 * n + i  # slack starts basic
    t = _Tableau(tableau_rows, basis, zero)

    if art_rows:
        phase1_cost = [zero] * total_cols
        for k in range(len(art_rows)):
            phase1_cost[n_struct + k] = one
        obj, _ = t.minimize(phase1_cost, range(total_cols))
        if obj[-1] > 0:
            return None
        # drive leftover artificials out of the basis or drop their rows
        keep = []
        for i in range(len(t.rows)):
            if t.basis[i] >= n_struct:
                replaced = False
                for j in range(n_struct):
                    if t.rows[i][j] != 0:
                        t.pivot(i, j)
                        replaced = True
                        break
                if not replaced:
                    continue  # zero structural row: redundant constraint
            keep.append(i)
        t.rows = [t.rows[i] for i in keep]
        t.basis = [t.basis[i] for i in keep]
    return t, n_struct, zero


def _optimize(t: _Tableau, n_struct: int, zero, objective, n: int) -> LPResult:
    total_cols = len(t.rows[0]) - 1 if t.rows else n_struct
    phase2_cost = [zero] * total_cols
    for j in range(n):
        phase2_cost[j] = -objective[j]
        phase2_cost[n + j] = objective[j]
    obj, bounded = t.minimize(phase2_cost, range(n_struct))
    if not bounded:
        return LPResult(LPStatus.UNBOUNDED, None, None)
    values = {}
    for i, b in enumerate(t.basis):
        values[b] = t.rows[i][-1]
    x = [values.get(j, zero) - values.get(n + j, zero) for j in range(n)]
    value = zero
    for c, xi in zip(objective, x):
        value = value + c * xi
    return LPResult(LPStatus.OPTIMAL, value, x)


def solve_lp(objective: Sequence,
             ineq_rows: Sequence[Sequence],
             ineq_rhs: Sequence,
             eq_rows: Sequence[Sequence] = (),
             eq_rhs: Sequence = ()) -> LPResult:
    """Maximize objective . x subject to ineq_rows x <= ineq_rhs, eq_rows x = eq_rhs."""
    conv = _field_converter([objective], ineq_rows, [ineq_rhs], eq_rows, [eq_rhs])
    objective = [conv(c) for c in objective]
    n = len(objective)
    prep = _prepare(n, conv, ineq_rows, ineq_rhs, eq_rows, eq_rhs)
    if prep is None:
        return LPResult(LPStatus.INFEASIBLE, None, None)
    t, n_struct, zero = prep
    return _optimize(t, n_struct, zero, objective, n)


def maximize_batch(objectives: Sequence[Sequence],
                   ineq_rows: Sequence[Sequence],
                   ineq_rhs: Sequence,
                   eq_rows: Sequence[Sequence] = (),
                   eq_rhs: Sequence = ()):
    """Yield LPResults for several objectives over one constraint set.

    The tableau is built (and phase 1 run) once; each objective re-optimizes
    from the previous optimal basis, which stays feasible because the
    constraints never change.
    """
    conv = _field_converter(objectives, ineq_rows, [ineq_rhs], eq_rows, [eq_rhs])
    if not objectives:
        return
    n = len(objectives[0])
    prep = _prepare(n, conv, ineq_rows, ineq_rhs, eq_rows, eq_rhs)
    for objective in objectives:
        objective = [conv(c) for c in objective]
        if prep is None:
            yield LPResult(LPStatus.INFEASIBLE, None, None)
            continue
        t, n_struct, zero = prep
        yield _optimize(t, n_struct, zero, objective, n)


def feasible_point(ineq_rows: Sequence[Sequence],
                   ineq_rhs: Sequence,
                   eq_rows: Sequence[Sequence] = (),
                   eq_rhs: Sequence = ()) -> list | None:
    """A point of {x : Ax <= b, Ex = d}, or None when the system is infeasible."""
    if not ineq_rows and not eq_rows:
        raise ValueError("feasible_point needs at least one constraint row")
    n = len(ineq_rows[0]) if ineq_rows else len(eq_rows[0])
    res = solve_lp([0] * n, ineq_rows, ineq_rhs, eq_rows, eq_rhs)
    if res.status is LPStatus.INFEASIBLE:
        return None
    return res.x
