"""Spectral decision procedure for convex processes.

Decides whether a process has eigenvalues (nonzero xi with lambda*xi in
H(xi)) in [0, inf) or (0, inf). Substituting y = lambda*x into the graph
constraints yields a matrix M(lambda) with entries linear in lambda; the
feasibility pattern of {xi != 0 : M(lambda) xi <= 0} can change only where
some square minor of M vanishes, so the nonnegative roots of all k x k
minors (k up to min(rows, n)) form a complete breakpoint set. Every open
interval between consecutive breakpoints is classified by one exact LP batch
at a rational sample; rational breakpoints are tested directly; irrational
breakpoints are decided by the same LPs run over Q(alpha), with every sign
resolved by refining the isolating interval (depth-capped, surrendering to
INDETERMINATE rather than guessing).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cmp_to_key
from typing import Sequence, Union

from .lp import LPStatus, maximize_batch
from .polynomials import (
    AlgebraicContext, AlgebraicNumber, Poly, RefinementExhausted,
    cmp_roots, isolate_roots_in,
)
from .process import ConvexProcess
from .cones import PolyhedralCone, _dd
from .rational import RatMatrix, kernel_basis, rat_str, rref, unit_vector

RootValue = Union[Fraction, AlgebraicNumber]


class EigenConstraint(Enum):
    LAMBDA_GEQ_0 = "lambda>=0"
    LAMBDA_GT_0 = "lambda>0"


class EigenStatus(Enum):
    EXISTS = "EXISTS"
    NOT_EXISTS = "NOT_EXISTS"
    INDETERMINATE = "INDETERMINATE"


@dataclass
class EigenWitness:
    """A certified eigenpair; xi has Q(alpha) coordinates when lam is irrational."""

    lam: RootValue
    xi: tuple

    def to_json(self) -> dict:
        if isinstance(self.lam, Fraction):
            lam = rat_str(self.lam)
            xi = [rat_str(v) for v in self.xi]
        else:
            lam = _alg_json(self.lam)
            xi = [{"poly": [rat_str(c) for c in v.coeffs]} for v in self.xi]
        return {"lambda": lam, "xi": xi}


def _alg_json(a: AlgebraicNumber) -> dict:
    return {"interval": [rat_str(a.lo), rat_str(a.hi)],
            "minpoly": [rat_str(c) for c in a.minpoly.coeffs]}


@dataclass
class EigenReport:
    """Certified description of the eigenvalue set intersected with the domain."""

    constraint: EigenConstraint
    status: EigenStatus
    witnesses: list[EigenWitness]
    unresolved: list[AlgebraicNumber]
    # classification data: breakpoints > 0 in increasing order, the open
    # intervals between them (len(bounds) + 1 entries), and the tested points
    bounds: list[RootValue] = field(default_factory=list)
    interval_feasible: list[bool] = field(default_factory=list)
    interval_samples: list[Fraction] = field(default_factory=list)
    point_feasible: list[bool | None] = field(default_factory=list)
    zero_feasible: bool | None = None

    def classify(self, lam: Fraction) -> bool:
        """Feasibility classification of a rational lambda in the queried domain."""
        if lam < 0:
            raise ValueError("classification is defined on the queried domain only")
        if lam == 0:
            if self.constraint is not EigenConstraint.LAMBDA_GEQ_0:
                raise ValueError("lambda = 0 is outside the lambda > 0 domain")
            return self.zero_feasible
        for i, b in enumerate(self.bounds):
            c = cmp_roots(lam, b)
            if c == 0:
                decided = self.point_feasible[i]
                if decided is None:
                    raise ValueError("breakpoint was not decided")
                return decided
            if c < 0:
                return self.interval_feasible[i]
        return self.interval_feasible[-1]

    def to_json(self) -> dict:
        return {
            "constraint": self.constraint.value,
            "status": self.status.value,
            "witnesses": [w.to_json() for w in self.witnesses],
            "unresolved": [_alg_json(a) for a in self.unresolved],
        }


def _graph_rows(process: ConvexProcess,
                restrict: PolyhedralCone | None) -> tuple[list[list[Poly]], list[list[Poly]]]:
    """Constraint rows over xi with entries polynomial in lambda."""
    n = process.n
    g = process.graph
    ineq_rows = [[Poly.from_coeffs([w[i], w[n + i]]) for i in range(n)] for w in g.ineqs]
    eq_rows = [[Poly.from_coeffs([e[i], e[n + i]]) for i in range(n)] for e in g.eqs]
    if restrict is not None:
        if restrict.n != n:
            raise ValueError("restriction cone dimension mismatch")
        rc = restrict.complete()
        ineq_rows += [[Poly.constant(w[i]) for i in range(n)] for w in rc.ineqs]
        eq_rows += [[Poly.constant(e[i]) for i in range(n)] for e in rc.eqs]
    return ineq_rows, eq_rows


def _rows_at_rational(ineq_rows, eq_rows, lam: Fraction):
    ineqs = [[p(lam) for p in row] for row in ineq_rows]
    eqs = [[p(lam) for p in row] for row in eq_rows]
    return ineqs, eqs


def _rows_at_algebraic(ineq_rows, eq_rows, ctx: AlgebraicContext):
    ineqs = [[ctx.element(p.coeffs) for p in row] for row in ineq_rows]
    eqs = [[ctx.element(p.coeffs) for p in row] for row in eq_rows]
    return ineqs, eqs


def _nontrivial_by_lp(ineqs, eqs, n: int, one) -> tuple[bool, list | None]:
    """Does {xi != 0 : ineqs xi <= 0, eqs xi = 0} have a point? LP per signed direction.

    The cone is nontrivial iff it meets the boundary of the unit box in some
    signed coordinate direction, so each of the 2n LPs maximizes a coordinate
    over the box-truncated cone; any positive optimum certifies a point. The
    LPs share one warm-started tableau.
    """
    zero = one - one
    box_rows = []
    box_rhs = []
    for i in range(n):
        e = [zero] * n
        e[i] = one
        box_rows.append(list(e))
        box_rhs.append(one)
        box_rows.append([-v for v in e])
        box_rhs.append(one)
    cone_rows = [list(r) for r in ineqs]
    cone_rhs = [zero] * len(cone_rows)
    objectives = []
    for i in range(n):
        for sign in (one, -one):
            objective = [zero] * n
            objective[i] = sign
            objectives.append(objective)
    results = maximize_batch(objectives, cone_rows + box_rows, cone_rhs + box_rhs,
                             eq_rows=[list(r) for r in eqs],
                             eq_rhs=[zero] * len(eqs))
    for res in results:
        assert res.status is LPStatus.OPTIMAL  # feasible at 0, box-bounded
        if res.value > 0:
            return True, res.x
    return False, None


def cone_nontrivial_at(process: ConvexProcess, lam: Fraction,
                       restrict: PolyhedralCone | None = None) -> tuple[bool, tuple | None]:
    """Decide C(lambda) = {xi : (xi, lambda xi) in graph} != {0} at rational lambda.

    Rational instances are decided by enumerating the cone's generators
    (double description), which is far cheaper than the signed-direction LP
    batch and returns a generator as the certificate; the LP batch (see
    ``_nontrivial_by_lp``) remains the engine at algebraic breakpoints and is
    cross-checked against this path in the test suite.
    """
    lam = Fraction(lam)
    ineq_rows, eq_rows = _graph_rows(process, restrict)
    ineqs, eqs = _rows_at_rational(ineq_rows, eq_rows, lam)
    n = process.n
    all_rows = [r for r in ineqs + eqs if any(x != 0 for x in r)]
    if not all_rows:
        return (True, unit_vector(n, 0)) if n > 0 else (False, None)
    # a vector annihilating every row satisfies all constraints with equality
    ker = kernel_basis(RatMatrix.from_rows(all_rows))
    if ker:
        return True, ker[0]
    # C lies inside the kernel of the equality rows: full rank forces C = {0}
    eq_nonzero = [r for r in eqs if any(x != 0 for x in r)]
    if eq_nonzero and len(rref(RatMatrix.from_rows(eq_nonzero))[1]) == n:
        return False, None
    rays, lines = _dd([tuple(r) for r in ineqs], [tuple(r) for r in eqs], n)
    if lines:
        return True, lines[0]
    if rays:
        return True, rays[0]
    return False, None


def _nontrivial_by_lp_rational(ineqs, eqs, n: int) -> tuple[bool, tuple | None]:
    """The signed-direction LP formulation at a rational lambda (testing hook)."""
    found, x = _nontrivial_by_lp(ineqs, eqs, n, Fraction(1))
    return found, tuple(x) if x is not None else None


def _generic_kernel(rows: list[list], n: int, zero, one) -> list[list]:
    """Kernel basis over any exact field; pivoting needs only zero tests.

    In Q(alpha) with an irreducible minimal polynomial, equality with zero is
    a representation check, so this costs no interval refinement at all.
    """
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        pv = mat[r][c]
        if pv != 1:
            mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    basis = []
    pivot_set = set(pivots)
    for free in (j for j in range(n) if j not in pivot_set):
        v = [zero] * n
        v[free] = one
        for r_idx, p in enumerate(pivots):
            v[p] = zero - mat[r_idx][free]
        basis.append(v)
    return basis


def _nontrivial_at_algebraic(ineq_rows, eq_rows, n: int,
                             alpha: AlgebraicNumber,
                             refine_depth: int) -> tuple[bool, tuple | None]:
    ctx = AlgebraicContext(alpha, refine_depth)
    ineqs, eqs = _rows_at_algebraic(ineq_rows, eq_rows, ctx)
    zero, one = ctx.from_rat(0), ctx.from_rat(1)
    all_rows = [r for r in ineqs + eqs if any(bool(x) for x in r)]
    if not all_rows:
        return (True, tuple([one] + [zero] * (n - 1))) if n > 0 else (False, None)
    ker = _generic_kernel(all_rows, n, zero, one)
    if ker:
        return True, tuple(ker[0])
    eq_nonzero = [r for r in eqs if any(bool(x) for x in r)]
    if eq_nonzero and not _generic_kernel(eq_nonzero, n, zero, one):
        return False, None
    found, x = _nontrivial_by_lp(ineqs, eqs, n, one)
    return found, tuple(x) if x is not None else None


def _minor_family(ineq_rows, eq_rows, n: int) -> list[Poly]:
    """All nonconstant k x k minors of the stacked parametric matrix, deduplicated."""
    rows = ineq_rows + eq_rows
    m = len(rows)
    seen: dict[tuple, Poly] = {}
    for k in range(1, min(m, n) + 1):
        for ridx in itertools.combinations(range(m), k):
            sub = [rows[i] for i in ridx]
            for cidx in itertools.combinations(range(n), k):
                det = _poly_det([[row[j] for j in cidx] for row in sub])
                if det.degree >= 1:
                    key = det.primitive().coeffs
                    seen.setdefault(key, det.primitive())
    return list(seen.values())


def _poly_det(mat: list[list[Poly]]) -> Poly:
    k = len(mat)
    if k == 1:
        return mat[0][0]
    if k == 2:
        return mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    det = Poly(())
    for j, entry in enumerate(mat[0]):
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = entry * _poly_det(minor)
        det = det + term if j % 2 == 0 else det - term
    return det


def _breakpoints(polys: Sequence[Poly]) -> tuple[set[Fraction], list[AlgebraicNumber]]:
    """Nonnegative roots of the family: exact rationals plus isolated algebraics."""
    rational: set[Fraction] = set()
    factors: dict[tuple, Poly] = {}
    for p in polys:
        for f in p.factor_irreducible():
            factors.setdefault(f.coeffs, f)
    algebraic: list[AlgebraicNumber] = []
    for f in factors.values():
        if f.degree == 1:
            root = -f.coeffs[0] / f.coeffs[1]
            if root >= 0:
                rational.add(root)
        else:
            bound = f.cauchy_bound()
            for lo, hi in isolate_roots_in(f, Fraction(0), bound):
                algebraic.append(AlgebraicNumber(f, lo, hi))
    return rational, algebraic


def _rational_between(left: RootValue | None, right: RootValue | None) -> Fraction:
    """A rational strictly inside the open interval (left, right) within (0, inf)."""
    if left is None:
        left = Fraction(0)
    if right is None:
        if isinstance(left, Fraction):
            return left + 1
        return left.hi + 1
    if isinstance(left, Fraction) and isinstance(right, Fraction):
        return (left + right) / 2
    if isinstance(left, Fraction):
        while right.lo <= left:
            right.refine()
        return (left + right.lo) / 2
    if isinstance(right, Fraction):
        while left.hi >= right:
            left.refine()
        return (left.hi + right) / 2
    while left.hi > right.lo:
        left.refine()
        right.refine()
    return (left.hi + right.lo) / 2


def eigen_exists(process: ConvexProcess,
                 constraint: EigenConstraint,
                 restrict: PolyhedralCone | None = None,
                 refine_depth: int = 64) -> EigenReport:
    """Decide whether the eigenvalue set meets [0, inf) (or (0, inf))."""
    n = process.n
    ineq_rows, eq_rows = _graph_rows(process, restrict)
    minors = _minor_family(ineq_rows, eq_rows, n)
    rational_bps, algebraic_bps = _breakpoints(minors)

    positive_bps: list[RootValue] = [b for b in rational_bps if b > 0]
    positive_bps.extend(algebraic_bps)  # all algebraic breakpoints are > 0 by isolation
    positive_bps.sort(key=cmp_to_key(cmp_roots))

    witnesses: list[EigenWitness] = []
    unresolved: list[AlgebraicNumber] = []

    # lambda = 0 (only meaningful under the nonnegative constraint)
    zero_feasible = None
    if constraint is EigenConstraint.LAMBDA_GEQ_0:
        feasible, xi = cone_nontrivial_at(process, Fraction(0), restrict)
        zero_feasible = feasible
        if feasible:
            witnesses.append(EigenWitness(Fraction(0), tuple(xi)))

    # open intervals between consecutive breakpoints, plus one past the last
    interval_feasible: list[bool] = []
    interval_samples: list[Fraction] = []
    boundaries: list[RootValue | None] = [None] + list(positive_bps) + [None]
    for left, right in zip(boundaries, boundaries[1:]):
        sample = _rational_between(left, right)
        feasible, xi = cone_nontrivial_at(process, sample, restrict)
        interval_feasible.append(feasible)
        interval_samples.append(sample)
        if feasible:
            witnesses.append(EigenWitness(sample, tuple(xi)))

    # breakpoints themselves
    point_feasible: list[bool | None] = []
    for b in positive_bps:
        if isinstance(b, Fraction):
            feasible, xi = cone_nontrivial_at(process, b, restrict)
            point_feasible.append(feasible)
            if feasible:
                witnesses.append(EigenWitness(b, tuple(xi)))
            continue
        if witnesses:
            # existence is already certified: the algebraic point is moot
            point_feasible.append(None)
            continue
        try:
            feasible, xi = _nontrivial_at_algebraic(ineq_rows, eq_rows, n, b, refine_depth)
            point_feasible.append(feasible)
            if feasible:
                witnesses.append(EigenWitness(b, tuple(xi)))
        except RefinementExhausted:
            point_feasible.append(None)
            unresolved.append(b)

    if witnesses:
        status = EigenStatus.EXISTS
    elif unresolved:
        status = EigenStatus.INDETERMINATE
    else:
        status = EigenStatus.NOT_EXISTS
    return EigenReport(constraint=constraint, status=status,
                       witnesses=witnesses, unresolved=unresolved,
                       bounds=positive_bps,
                       interval_feasible=interval_feasible,
                       interval_samples=interval_samples,
                       point_feasible=point_feasible,
                       zero_feasible=zero_feasible)


def verify_eigenpair(process: ConvexProcess, witness: EigenWitness) -> bool:
    """Exact check that (xi, lambda xi) lies in the graph and xi != 0."""
    n = process.n
    g = process.graph
    if isinstance(witness.lam, Fraction):
        xi = witness.xi
        if all(v == 0 for v in xi):
            return False
        pair = tuple(xi) + tuple(witness.lam * v for v in xi)
        return g.contains_point(pair)
    ctx = witness.xi[0].ctx if witness.xi else None
    if ctx is None:
        return False
    lam = ctx.generator()
    xi = list(witness.xi)
    if all(not v for v in xi):
        return False
    pair = xi + [lam * v for v in xi]
    for w in g.ineqs:
        total = ctx.from_rat(0)
        for coef, v in zip(w, pair):
            total = total + v * coef
        if total.sign() > 0:
            return False
    for e in g.eqs:
        total = ctx.from_rat(0)
        for coef, v in zip(e, pair):
            total = total + v * coef
        if total.sign() != 0:
            return False
    return True
