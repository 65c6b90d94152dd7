"""Polyhedral convex cone algebra with exact dual descriptions.

A cone is kept in up to two forms: generators (rays and lines, the V-form)
and constraints (inequalities <w, x> <= 0 and equalities <e, x> = 0, the
H-form). Conversion between the forms is Motzkin's double description method
run on the pointed quotient (lineality split off first), which also
canonicalizes: extreme rays are scaled so the first nonzero entry has
absolute value 1 and sorted, line/equality sets are canonical subspace bases.
Projections used by the process layer are available both through generator
images and through Fourier-Motzkin elimination with exact LP-based
redundancy pruning.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Sequence

from .lp import LPStatus, solve_lp
from .rational import (
    RatLike, RatMatrix, Subspace, Vector, invert, is_zero_vector,
    kernel_basis, rank, rat_str, unit_vector, vec_dot, vec_scale, vec_sub,
    vector,
)


def _canon_ray(v: Vector) -> Vector | None:
    """Scale by a positive factor so the first nonzero entry is +-1."""
    for x in v:
        if x != 0:
            return vec_scale(1 / abs(x), v)
    return None


def _canon_rays(vs: Iterable[Vector]) -> tuple[Vector, ...]:
    out = set()
    for v in vs:
        c = _canon_ray(v)
        if c is not None:
            out.add(c)
    return tuple(sorted(out))


def _canon_subspace_rows(vs: Iterable[Vector], n: int) -> tuple[Vector, ...]:
    return tuple(Subspace(n, list(vs)).basis_vectors())


def _independent_subset(rows: Sequence[Vector], target: int) -> list[int]:
    chosen: list[int] = []
    mat: list[Vector] = []
    for i, r in enumerate(rows):
        trial = mat + [r]
        if rank(RatMatrix.from_rows(trial)) == len(trial):
            chosen.append(i)
            mat = trial
            if len(chosen) == target:
                return chosen
    raise AssertionError("rows do not have full rank on a pointed cone")


def _dd_pointed(rows: Sequence[Vector], dim: int) -> list[Vector]:
    """Extreme rays of {x : r.x <= 0 for r in rows} when the cone is pointed.

    Requires kernel(rows) = {0}; incremental Motzkin steps with the
    combinatorial adjacency test.
    """
    if dim == 0:
        return []
    base = _independent_subset(rows, dim)
    b0 = RatMatrix.from_rows([rows[i] for i in base])
    inv = invert(b0)
    rays: list[Vector] = []
    active: list[set[int]] = []
    for j in range(dim):
        rays.append(_canon_ray(tuple(-inv[i, j] for i in range(dim))))
        active.append({base[k] for k in range(dim) if k != j})

    remaining = [i for i in range(len(rows)) if i not in set(base)]
    for t in remaining:
        w = rows[t]
        vals = [vec_dot(w, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zer = [i for i, v in enumerate(vals) if v == 0]
        if not pos:
            for i in zer:
                active[i].add(t)
            continue
        new_rays: list[Vector] = []
        new_active: list[set[int]] = []
        for i in neg:
            new_rays.append(rays[i])
            new_active.append(active[i])
        for i in zer:
            new_rays.append(rays[i])
            new_active.append(active[i] | {t})
        for p, q in itertools.product(pos, neg):
            z = active[p] & active[q]
            adjacent = True
            for o in range(len(rays)):
                if o != p and o != q and active[o] >= z:
                    adjacent = False
                    break
            if adjacent:
                combo = tuple(vals[p] * rq - vals[q] * rp
                              for rp, rq in zip(rays[p], rays[q]))
                new_rays.append(_canon_ray(combo))
                new_active.append(z | {t})
        rays = new_rays
        active = new_active
    return rays


def _dd(ineqs: Sequence[Vector], eqs: Sequence[Vector], n: int) -> tuple[tuple[Vector, ...], tuple[Vector, ...]]:
    """Canonical V-form (rays, lines) of {x : ineqs.x <= 0, eqs.x = 0}."""
    rows = [r for r in list(ineqs) + list(eqs) if not is_zero_vector(r)]
    if not rows:
        lines = tuple(unit_vector(n, i) for i in range(n))
        return (), lines
    lin = Subspace(n, kernel_basis(RatMatrix.from_rows(rows)))
    lines = tuple(lin.basis_vectors())
    if lin.dim == n:
        return (), lines

    # complement of the lineality space: the non-pivot standard coordinates
    pivot_rows = set()
    for col in lines:
        for i, x in enumerate(col):
            if x != 0:
                pivot_rows.add(i)
                break
    free = [i for i in range(n) if i not in pivot_rows]
    d1 = len(free)

    def restrict(row: Vector) -> Vector:
        return tuple(row[i] for i in free)

    ineq_r = [restrict(r) for r in ineqs if not is_zero_vector(r)]
    eq_r = [restrict(r) for r in eqs if not is_zero_vector(r)]
    if eq_r:
        nbasis = kernel_basis(RatMatrix.from_rows(eq_r))
    else:
        nbasis = [unit_vector(d1, i) for i in range(d1)]
    d2 = len(nbasis)
    if d2 == 0:
        return (), lines
    b_rows = []
    for a in ineq_r:
        row = tuple(vec_dot(a, nb) for nb in nbasis)
        if not is_zero_vector(row):
            b_rows.append(row)
    assert b_rows, "pointed quotient with no constraints contradicts maximal lineality"
    rays_w = _dd_pointed(b_rows, d2)
    rays = []
    for w in rays_w:
        z = [Fraction(0)] * d1
        for coef, nb in zip(w, nbasis):
            for k in range(d1):
                z[k] += coef * nb[k]
        x = [Fraction(0)] * n
        for k, idx in enumerate(free):
            x[idx] = z[k]
        rays.append(tuple(x))
    return _canon_rays(rays), lines


def _hform_from_vform(rays: Sequence[Vector], lines: Sequence[Vector], n: int) -> tuple[tuple[Vector, ...], tuple[Vector, ...]]:
    """Canonical H-form of cone(rays) + span(lines) via the polar's V-form."""
    polar_rays, polar_lines = _dd(list(rays), list(lines), n)
    return polar_rays, polar_lines


class PolyhedralCone:
    """A closed convex polyhedral cone in R^n, in dual (V/H) description.

    Instances are value-like: operations return new cones and never mutate;
    ``complete()`` returns a canonical twin carrying both descriptions.
    """

    __slots__ = ("n", "_rays", "_lines", "_ineqs", "_eqs", "_completed")

    def __init__(self, n: int,
                 rays: Sequence[Sequence[RatLike]] | None = None,
                 lines: Sequence[Sequence[RatLike]] | None = None,
                 ineqs: Sequence[Sequence[RatLike]] | None = None,
                 eqs: Sequence[Sequence[RatLike]] | None = None):
        def conv(vs):
            if vs is None:
                return None
            out = []
            for v in vs:
                vv = vector(v)
                if len(vv) != n:
                    raise ValueError(f"vector {v} has length {len(vv)}, expected {n}")
                out.append(vv)
            return tuple(out)

        self.n = n
        has_v = rays is not None or lines is not None
        has_h = ineqs is not None or eqs is not None
        if not has_v and not has_h:
            raise ValueError("cone needs at least one description")
        self._rays = conv(rays) if has_v else None
        self._lines = conv(lines) if has_v else None
        if has_v:
            self._rays = self._rays or ()
            self._lines = self._lines or ()
        self._ineqs = conv(ineqs) if has_h else None
        self._eqs = conv(eqs) if has_h else None
        if has_h:
            self._ineqs = self._ineqs or ()
            self._eqs = self._eqs or ()
        self._completed = None
        if has_v and has_h:
            self._check_mutual_membership()

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rays(n: int, rays: Sequence[Sequence[RatLike]],
                  lines: Sequence[Sequence[RatLike]] = ()) -> "PolyhedralCone":
        return PolyhedralCone(n, rays=rays, lines=lines)

    @staticmethod
    def from_hform(n: int, ineqs: Sequence[Sequence[RatLike]],
                   eqs: Sequence[Sequence[RatLike]] = ()) -> "PolyhedralCone":
        return PolyhedralCone(n, ineqs=ineqs, eqs=eqs)

    @staticmethod
    def full(n: int) -> "PolyhedralCone":
        return PolyhedralCone(n, ineqs=(), eqs=())

    @staticmethod
    def zero(n: int) -> "PolyhedralCone":
        return PolyhedralCone(n, rays=(), lines=())

    @staticmethod
    def from_subspace(s: Subspace) -> "PolyhedralCone":
        return PolyhedralCone(s.ambient_dim, rays=(), lines=s.basis_vectors())

    @staticmethod
    def from_point_ray(p: Sequence[RatLike]) -> "PolyhedralCone":
        v = vector(p)
        return PolyhedralCone(len(v), rays=[v])

    # -- forms -------------------------------------------------------------

    def has_vform(self) -> bool:
        return self._rays is not None

    def has_hform(self) -> bool:
        return self._ineqs is not None

    @property
    def rays(self) -> tuple[Vector, ...]:
        if self._rays is None:
            raise ValueError("V-form not materialized; call complete()")
        return self._rays

    @property
    def lines(self) -> tuple[Vector, ...]:
        if self._lines is None:
            raise ValueError("V-form not materialized; call complete()")
        return self._lines

    @property
    def ineqs(self) -> tuple[Vector, ...]:
        if self._ineqs is None:
            raise ValueError("H-form not materialized; call complete()")
        return self._ineqs

    @property
    def eqs(self) -> tuple[Vector, ...]:
        if self._eqs is None:
            raise ValueError("H-form not materialized; call complete()")
        return self._eqs

    def complete(self) -> "PolyhedralCone":
        """Canonical cone with both descriptions materialized."""
        if self._completed is not None:
            return self._completed
        if self.has_hform():
            rays, lines = _dd(self._ineqs, self._eqs, self.n)
        else:
            ineqs, eqs = _hform_from_vform(self._rays, self._lines, self.n)
            rays, lines = _dd(ineqs, eqs, self.n)
        ineqs, eqs = _hform_from_vform(rays, lines, self.n)
        out = PolyhedralCone.__new__(PolyhedralCone)
        out.n = self.n
        out._rays = tuple(rays)
        out._lines = tuple(lines)
        out._ineqs = tuple(ineqs)
        out._eqs = tuple(eqs)
        out._completed = out
        self._completed = out
        return out

    def _check_mutual_membership(self) -> None:
        for r in self._rays:
            for w in self._ineqs:
                if vec_dot(w, r) > 0:
                    raise ValueError("ray violates an inequality of the same cone")
            for e in self._eqs:
                if vec_dot(e, r) != 0:
                    raise ValueError("ray violates an equality of the same cone")
        for l in self._lines:
            for w in self._ineqs:
                if vec_dot(w, l) != 0:
                    raise ValueError("line not contained in an inequality's hyperplane")
            for e in self._eqs:
                if vec_dot(e, l) != 0:
                    raise ValueError("line violates an equality of the same cone")

    # -- membership and queries --------------------------------------------

    def contains_point(self, p: Sequence[RatLike]) -> bool:
        v = vector(p)
        if len(v) != self.n:
            raise ValueError("point has wrong dimension")
        c = self.complete()
        return (all(vec_dot(w, v) <= 0 for w in c.ineqs)
                and all(vec_dot(e, v) == 0 for e in c.eqs))

    def contains_cone(self, other: "PolyhedralCone") -> bool:
        if self.n != other.n:
            raise ValueError("ambient dimension mismatch")
        o = other.complete()
        return (all(self.contains_point(r) for r in o.rays)
                and all(self.contains_point(l) and self.contains_point(tuple(-x for x in l))
                        for l in o.lines))

    def set_equals(self, other: "PolyhedralCone") -> bool:
        return self.contains_cone(other) and other.contains_cone(self)

    def is_full(self) -> bool:
        c = self.complete()
        return not c.ineqs and not c.eqs

    def is_zero(self) -> bool:
        c = self.complete()
        return not c.rays and not c.lines

    def is_pointed(self) -> bool:
        return not self.complete().lines

    def is_subspace(self) -> bool:
        return not self.complete().rays

    # -- lineality / span ----------------------------------------------------

    def lin(self) -> Subspace:
        """Largest subspace contained in the cone."""
        return Subspace(self.n, self.complete().lines)

    def linspan(self) -> Subspace:
        """Smallest subspace containing the cone (the span of all generators)."""
        c = self.complete()
        return Subspace(self.n, list(c.rays) + list(c.lines))

    # -- algebra -------------------------------------------------------------

    def polar(self, positive: bool = False) -> "PolyhedralCone":
        """Negative polar {y : <x,y> <= 0 on the cone}; positive polar is its negation.

        For a canonical double description the polar is exactly the form swap
        (rays <-> ineqs, lines <-> eqs), and the swap of canonical forms is
        canonical, so no conversion has to run.
        """
        c = self.complete()
        neg = PolyhedralCone.__new__(PolyhedralCone)
        neg.n = self.n
        neg._rays, neg._lines = c._ineqs, c._eqs
        neg._ineqs, neg._eqs = c._rays, c._lines
        neg._completed = neg
        if not positive:
            return neg
        return neg.negate()

    def negate(self) -> "PolyhedralCone":
        return self.signed_permutation(list(range(self.n)), [-1] * self.n)

    def sum(self, other: "PolyhedralCone") -> "PolyhedralCone":
        """Minkowski sum (union of generator sets)."""
        if self.n != other.n:
            raise ValueError("ambient dimension mismatch")
        a, b = self.complete(), other.complete()
        return PolyhedralCone(self.n, rays=a.rays + b.rays,
                              lines=a.lines + b.lines).complete()

    def intersect(self, other: "PolyhedralCone") -> "PolyhedralCone":
        if self.n != other.n:
            raise ValueError("ambient dimension mismatch")
        a, b = self.complete(), other.complete()
        return PolyhedralCone(self.n, ineqs=a.ineqs + b.ineqs,
                              eqs=a.eqs + b.eqs).complete()

    def image(self, m: RatMatrix) -> "PolyhedralCone":
        """{Mx : x in cone}, mapping generators."""
        if m.cols != self.n:
            raise ValueError(f"matrix has {m.cols} columns, cone lives in R^{self.n}")
        c = self.complete()
        return PolyhedralCone(m.rows,
                              rays=[m.apply(r) for r in c.rays],
                              lines=[m.apply(l) for l in c.lines]).complete()

    def preimage(self, m: RatMatrix) -> "PolyhedralCone":
        """{x : Mx in cone}, composing constraints with M."""
        if m.rows != self.n:
            raise ValueError(f"matrix has {m.rows} rows, cone lives in R^{self.n}")
        c = self.complete()
        mt = m.transpose()
        return PolyhedralCone(m.cols,
                              ineqs=[mt.apply(w) for w in c.ineqs],
                              eqs=[mt.apply(e) for e in c.eqs]).complete()

    def project(self, coords: Sequence[int]) -> "PolyhedralCone":
        """Image under the coordinate-selection map."""
        rows = [unit_vector(self.n, i) for i in coords]
        return self.image(RatMatrix.from_rows(rows, cols=self.n))

    def signed_permutation(self, perm: Sequence[int], signs: Sequence[int] | None = None) -> "PolyhedralCone":
        """Image under x_i -> signs[i] * x_{perm[i]}; exact on both forms, no DD run."""
        n = self.n
        if signs is None:
            signs = [1] * n
        m = RatMatrix.from_rows(
            [vec_scale(Fraction(signs[i]), unit_vector(n, perm[i])) for i in range(n)])

        def map_vecs(vs):
            return tuple(m.apply(v) for v in vs)

        out = PolyhedralCone.__new__(PolyhedralCone)
        out.n = n
        out._completed = None
        src = self
        out._rays = _canon_rays(map_vecs(src._rays)) if src._rays is not None else None
        out._lines = (_canon_subspace_rows(map_vecs(src._lines), n)
                      if src._lines is not None else None)
        # for a signed permutation P, P^{-1} = P^T and rows transform like points
        out._ineqs = _canon_rays(map_vecs(src._ineqs)) if src._ineqs is not None else None
        out._eqs = (_canon_subspace_rows(map_vecs(src._eqs), n)
                    if src._eqs is not None else None)
        if src._completed is src:
            out._completed = out
        return out

    # -- serialization / display ---------------------------------------------

    def to_dict(self) -> dict:
        c = self.complete()
        fmt = lambda vs: [[rat_str(x) for x in v] for v in vs]
        return {"rays": fmt(c.rays), "lines": fmt(c.lines),
                "ineqs": fmt(c.ineqs), "eqs": fmt(c.eqs)}

    def __repr__(self) -> str:
        parts = [f"n={self.n}"]
        if self._rays is not None:
            parts.append(f"rays={len(self._rays)} lines={len(self._lines)}")
        if self._ineqs is not None:
            parts.append(f"ineqs={len(self._ineqs)} eqs={len(self._eqs)}")
        return f"PolyhedralCone({', '.join(parts)})"


# -- Fourier-Motzkin projection ---------------------------------------------


def _prune_redundant(ineqs: list[Vector], eqs: list[Vector]) -> list[Vector]:
    """Drop inequalities implied by the rest (exact LP test)."""
    ineqs = [r for r in dict.fromkeys(_canon_ray(r) for r in ineqs) if r is not None]
    kept = list(ineqs)
    i = 0
    while i < len(kept):
        w = kept[i]
        others = kept[:i] + kept[i + 1:]
        rows = [list(r) for r in others] + [list(w)]
        rhs = [Fraction(0)] * len(others) + [Fraction(1)]
        res = solve_lp(list(w), rows, rhs,
                       eq_rows=[list(e) for e in eqs],
                       eq_rhs=[Fraction(0)] * len(eqs))
        if res.status is LPStatus.OPTIMAL and res.value <= 0:
            kept.pop(i)
        else:
            i += 1
    return kept


def eliminate_coordinate(ineqs: list[Vector], eqs: list[Vector], j: int) -> tuple[list[Vector], list[Vector]]:
    """One Fourier-Motzkin step: project out coordinate j from a homogeneous system."""
    pivot_eq = next((e for e in eqs if e[j] != 0), None)

    def drop(v: Vector) -> Vector:
        return v[:j] + v[j + 1:]

    if pivot_eq is not None:
        out_ineqs, out_eqs = [], []
        for r in ineqs:
            out_ineqs.append(drop(vec_sub(r, vec_scale(r[j] / pivot_eq[j], pivot_eq))))
        for e in eqs:
            if e is pivot_eq:
                continue
            out_eqs.append(drop(vec_sub(e, vec_scale(e[j] / pivot_eq[j], pivot_eq))))
        return out_ineqs, out_eqs

    pos = [r for r in ineqs if r[j] > 0]
    neg = [r for r in ineqs if r[j] < 0]
    zer = [r for r in ineqs if r[j] == 0]
    out_ineqs = [drop(r) for r in zer]
    for p, q in itertools.product(pos, neg):
        combo = tuple(p[j] * qx - q[j] * px for px, qx in zip(p, q))
        out_ineqs.append(drop(combo))
    return out_ineqs, [drop(e) for e in eqs]


def _fm_eliminate(ineqs: list[Vector], eqs: list[Vector],
                  elim: Sequence[int]) -> tuple[list[Vector], list[Vector]]:
    """Eliminate the given coordinates last-to-first, pruning after each step."""
    for j in sorted(elim, reverse=True):
        ineqs, eqs = eliminate_coordinate(ineqs, eqs, j)
        if eqs:
            eqs = list(Subspace(len(eqs[0]), eqs).basis_vectors())
        ineqs = _prune_redundant(ineqs, eqs)
    return ineqs, eqs


def fm_project(cone: PolyhedralCone, keep: Sequence[int]) -> PolyhedralCone:
    """Projection onto the kept coordinates via Fourier-Motzkin elimination.

    Eliminates the complement last-to-first with redundancy pruning after
    every elimination; equivalent to the generator-image projection.
    """
    c = cone.complete()
    ineqs = [tuple(r) for r in c.ineqs]
    eqs = [tuple(r) for r in c.eqs]
    elim = sorted(set(range(cone.n)) - set(keep), reverse=True)
    ineqs, eqs = _fm_eliminate(ineqs, eqs, elim)
    m = len(keep)
    # the kept coordinates stay in their original relative order
    order = sorted(range(len(keep)), key=lambda i: keep[i])
    inverse = [0] * m
    for pos, i in enumerate(order):
        inverse[i] = pos
    reorder = lambda v: tuple(v[inverse[i]] for i in range(m))
    return PolyhedralCone(m, ineqs=[reorder(r) for r in ineqs],
                          eqs=[reorder(e) for e in eqs]).complete()
