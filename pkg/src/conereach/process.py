"""Convex processes as graph cones, and their linear envelopes.

A convex process H maps states to sets through a polyhedral graph cone in
R^{2n} with coordinates (x, y), y in H(x). Constrained linear dynamics
x+ = Ax + Bu with Cx + Du constrained to a cone become such a graph by exact
Fourier-Motzkin elimination of the input coordinates. Inversion and duality
are signed coordinate permutations (of the graph and of its polar), so they
are exact and cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cones import PolyhedralCone, _fm_eliminate
from .rational import (
    RatLike, RatMatrix, Subspace, Vector, unit_vector, vec_dot, vector,
    zero_vector,
)


@dataclass(frozen=True)
class LinearProcess:
    """A process whose graph is a subspace of R^{2n}."""

    n: int
    graph: Subspace

    def __post_init__(self):
        if self.graph.ambient_dim != 2 * self.n:
            raise ValueError("linear process graph must live in R^{2n}")

    def inverse(self) -> "LinearProcess":
        n = self.n
        swapped = [v[n:] + v[:n] for v in self.graph.basis_vectors()]
        return LinearProcess(n, Subspace(2 * n, swapped))

    def image_of(self, s: Subspace) -> Subspace:
        """L(S): project graph ∩ (S x R^n) onto the second block."""
        n = self.n
        if s.ambient_dim != n:
            raise ValueError("subspace dimension mismatch")
        cylinder = Subspace(2 * n, [v + zero_vector(n) for v in s.basis_vectors()]
                            + [zero_vector(n) + unit_vector(n, i) for i in range(n)])
        meet = self.graph.intersect(cylinder)
        return Subspace(n, [v[n:] for v in meet.basis_vectors()])

    def to_process(self) -> "ConvexProcess":
        return ConvexProcess(self.n, PolyhedralCone.from_subspace(self.graph))


class ConvexProcess:
    """A closed convex process given by its polyhedral graph cone."""

    __slots__ = ("n", "graph")

    def __init__(self, n: int, graph: PolyhedralCone):
        if graph.n != 2 * n:
            raise ValueError(f"graph cone lives in R^{graph.n}, expected R^{2 * n}")
        self.n = n
        self.graph = graph.complete()

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_matrix(a: RatMatrix) -> "ConvexProcess":
        """The single-valued process H(x) = {Ax}."""
        if a.rows != a.cols:
            raise ValueError("state matrix must be square")
        n = a.rows
        lines = [unit_vector(n, i) + a.col(i) for i in range(n)]
        return ConvexProcess(n, PolyhedralCone(2 * n, rays=(), lines=lines))

    @staticmethod
    def identity(n: int) -> "ConvexProcess":
        return ConvexProcess.from_matrix(RatMatrix.identity(n))

    @staticmethod
    def from_constrained_system(a: RatMatrix, b: RatMatrix, c: RatMatrix,
                                d: RatMatrix, y: PolyhedralCone) -> "ConvexProcess":
        """H(x) = {Ax + Bu : Cx + Du in Y}, inputs eliminated exactly.

        Works in (x, z, u) coordinates with z = Ax + Bu as equalities plus the
        constraint rows of Y composed with [C D]; the u block is eliminated
        last-to-first by Fourier-Motzkin with redundancy pruning after each
        elimination, leaving the graph over (x, z).
        """
        n = a.rows
        m = b.cols
        p = c.rows
        if a.cols != n or b.rows != n:
            raise ValueError("A must be n x n and B n x m")
        if c.cols != n or d.rows != p or d.cols != m:
            raise ValueError("C must be p x n and D p x m")
        if y.n != p:
            raise ValueError(f"constraint cone lives in R^{y.n}, expected R^{p}")

        total = 2 * n + m
        eqs: list[Vector] = []
        for i in range(n):
            row = [Fraction(0)] * total
            for j in range(n):
                row[j] = -a[i, j]
            row[n + i] = Fraction(1)
            for j in range(m):
                row[2 * n + j] = -b[i, j]
            eqs.append(tuple(row))
        yc = y.complete()
        ct, dt = c.transpose(), d.transpose()

        def composed(w: Vector) -> Vector:
            wx = ct.apply(w)
            wu = dt.apply(w)
            return wx + zero_vector(n) + wu

        ineqs = [composed(w) for w in yc.ineqs]
        eqs.extend(composed(e) for e in yc.eqs)
        ineqs, eqs = _fm_eliminate(ineqs, eqs, list(range(2 * n, total)))
        return ConvexProcess(n, PolyhedralCone(2 * n, ineqs=ineqs, eqs=eqs))

    # -- structure ---------------------------------------------------------

    def inverse(self) -> "ConvexProcess":
        n = self.n
        perm = list(range(n, 2 * n)) + list(range(n))
        return ConvexProcess(n, self.graph.signed_permutation(perm))

    def dual(self, positive: bool = False) -> "ConvexProcess":
        """Dual process: graph(H^-) = [[0, I], [-I, 0]] (graph H)^-.

        The positive dual has the negated graph of the negative dual.
        """
        n = self.n
        polar = self.graph.polar()
        perm = list(range(n, 2 * n)) + list(range(n))
        signs = [1] * n + [-1] * n
        minus = ConvexProcess(n, polar.signed_permutation(perm, signs))
        if not positive:
            return minus
        return ConvexProcess(n, minus.graph.negate())

    def linear_bounds(self) -> tuple[LinearProcess, LinearProcess]:
        """Minimal and maximal linear processes: lin(graph) and Lin(graph)."""
        return (LinearProcess(self.n, self.graph.lin()),
                LinearProcess(self.n, self.graph.linspan()))

    # -- images ------------------------------------------------------------

    def apply_cone(self, s: PolyhedralCone) -> PolyhedralCone:
        """H(S) for a cone S: project graph ∩ (S x R^n) onto the y block."""
        n = self.n
        if s.n != n:
            raise ValueError("argument cone dimension mismatch")
        sc = s.complete()
        pad = lambda vs: [v + zero_vector(n) for v in vs]
        cyl = PolyhedralCone(2 * n, ineqs=pad(sc.ineqs), eqs=pad(sc.eqs))
        return self.graph.intersect(cyl).project(range(n, 2 * n))

    def dom(self) -> PolyhedralCone:
        return self.graph.project(range(self.n))

    def im(self) -> PolyhedralCone:
        return self.graph.project(range(self.n, 2 * self.n))

    def zero_image(self) -> PolyhedralCone:
        """H(0), the graph slice at x = 0."""
        return self.apply_cone(PolyhedralCone.zero(self.n))

    def is_strict(self) -> bool:
        return self.dom().is_full()

    def contains_pair(self, x: Sequence[RatLike], y: Sequence[RatLike]) -> bool:
        """Exact membership y in H(x)."""
        return self.graph.contains_point(tuple(vector(x)) + tuple(vector(y)))

    def section_cone(self, x0: Sequence[RatLike]) -> PolyhedralCone:
        """Homogenization of the point image H(x0) in R^{1+n}.

        The cone {(t, y) : t >= 0, (t*x0, y) in graph}; its t = 1 slice is
        H(x0) and its t = 0 slice is H(0) (the recession cone of H(x0)).
        Built by substituting x = t*x0 into the graph constraints, which is
        the affine section of the graph as an exact conic object.
        """
        x0v = vector(x0)
        if len(x0v) != self.n:
            raise ValueError("point dimension mismatch")
        g = self.graph
        n = self.n
        ineqs = [(vec_dot(w[:n], x0v),) + w[n:] for w in g.ineqs]
        eqs = [(vec_dot(e[:n], x0v),) + e[n:] for e in g.eqs]
        t_nonneg = (Fraction(-1),) + zero_vector(n)
        return PolyhedralCone(1 + n, ineqs=ineqs + [t_nonneg], eqs=eqs).complete()

    # -- invariance --------------------------------------------------------

    def is_weakly_invariant(self, c: PolyhedralCone) -> bool:
        """C is weakly invariant iff C is contained in H^{-1}(C)."""
        return self.inverse().apply_cone(c).contains_cone(c)

    def is_strongly_invariant(self, c: PolyhedralCone) -> bool:
        return c.contains_cone(self.apply_cone(c))

    # -- comparison --------------------------------------------------------

    def set_equals(self, other: "ConvexProcess") -> bool:
        return self.n == other.n and self.graph.set_equals(other.graph)

    def __repr__(self) -> str:
        return f"ConvexProcess(n={self.n}, graph={self.graph!r})"
