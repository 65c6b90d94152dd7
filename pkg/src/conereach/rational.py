"""Exact rational linear algebra: scalars, matrices, and subspaces.

Every scalar in the library is a ``fractions.Fraction`` (always normalized,
exact comparison). Matrices are dense, immutable, row-major. Subspaces are
stored through a canonical reduced-column-echelon basis so that two equal
subspaces compare equal entrywise. No floating point is used anywhere in
this module.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rat = Fraction
RatLike = Union[Fraction, int, str]

Vector = tuple[Fraction, ...]


_RAT_GRAMMAR = re.compile(r"^[+-]?\d+(/\d+)?$")


def rat(value: RatLike) -> Fraction:
    """Parse a rational from an int, Fraction, or a "p/q" / "7" string.

    The string grammar is exactly integer or integer/positive-integer; in
    particular decimal notation is rejected (shared with the CLI JSON format).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RAT_GRAMMAR.match(text):
            raise ValueError(f"{value!r} does not match the rational grammar p/q")
        return Fraction(text)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def rat_str(value: Fraction) -> str:
    """Format a rational as "p/q", or "p" when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def vector(entries: Iterable[RatLike]) -> Vector:
    return tuple(rat(e) for e in entries)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Fraction, u: Vector) -> Vector:
    return tuple(c * a for a in u)


def vec_neg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def vec_dot(u: Vector, v: Vector):
    if len(u) != len(v):
        raise ValueError(f"dot of vectors of length {len(u)} and {len(v)}")
    total = 0
    for a, b in zip(u, v):
        total = total + a * b
    return total


def is_zero_vector(u: Vector) -> bool:
    return all(a == 0 for a in u)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


@dataclass(frozen=True)
class RatMatrix:
    """Immutable dense matrix with exact rational entries."""

    rows: int
    cols: int
    data: tuple[Vector, ...]  # row tuples

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ValueError("row count mismatch")
        for r in self.data:
            if len(r) != self.cols:
                raise ValueError("column count mismatch")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[RatLike]], cols: int | None = None) -> "RatMatrix":
        data = tuple(vector(r) for r in rows)
        if data:
            ncols = len(data[0])
        elif cols is not None:
            ncols = cols
        else:
            raise ValueError("empty matrix needs an explicit column count")
        return RatMatrix(len(data), ncols, data)

    @staticmethod
    def from_cols(cols: Sequence[Sequence[RatLike]], rows: int | None = None) -> "RatMatrix":
        vecs = [vector(c) for c in cols]
        if vecs:
            nrows = len(vecs[0])
        elif rows is not None:
            nrows = rows
        else:
            raise ValueError("empty matrix needs an explicit row count")
        data = tuple(tuple(c[i] for c in vecs) for i in range(nrows))
        return RatMatrix(nrows, len(vecs), data)

    @staticmethod
    def zeros(rows: int, cols: int) -> "RatMatrix":
        return RatMatrix(rows, cols, tuple(zero_vector(cols) for _ in range(rows)))

    @staticmethod
    def identity(n: int) -> "RatMatrix":
        return RatMatrix(n, n, tuple(unit_vector(n, i) for i in range(n)))

    def row(self, i: int) -> Vector:
        return self.data[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.data[i][j]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows, tuple(self.col(j) for j in range(self.cols)))

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in addition")
        return RatMatrix(self.rows, self.cols,
                         tuple(vec_add(a, b) for a, b in zip(self.data, other.data)))

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, tuple(vec_neg(r) for r in self.data))

    def scale(self, c: RatLike) -> "RatMatrix":
        c = rat(c)
        return RatMatrix(self.rows, self.cols, tuple(vec_scale(c, r) for r in self.data))

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        ot = other.transpose()
        data = tuple(tuple(vec_dot(r, c) for c in ot.data) for r in self.data)
        return RatMatrix(self.rows, other.cols, data)

    def apply(self, v: Vector) -> Vector:
        """Matrix-vector product."""
        if self.cols != len(v):
            raise ValueError("vector length mismatch")
        return tuple(vec_dot(r, v) for r in self.data)

    def hstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return RatMatrix(self.rows, self.cols + other.cols,
                         tuple(a + b for a, b in zip(self.data, other.data)))

    def vstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch in vstack")
        return RatMatrix(self.rows + other.rows, self.cols, self.data + other.data)

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.data]

    def is_zero(self) -> bool:
        return all(is_zero_vector(r) for r in self.data)


def rref(matrix: RatMatrix) -> tuple[RatMatrix, list[int]]:
    """Reduced row-echelon form and pivot column indices, by exact Gauss-Jordan."""
    rows = [list(r) for r in matrix.data]
    m, n = matrix.rows, matrix.cols
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pivot_row = None
        for i in range(r, m):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    data = tuple(tuple(row) for row in rows)
    return RatMatrix(m, n, data), pivots


def rank(matrix: RatMatrix) -> int:
    return len(rref(matrix)[1])


def kernel_basis(matrix: RatMatrix) -> list[Vector]:
    """Basis of the null space {x : Mx = 0}, one vector per free column."""
    reduced, pivots = rref(matrix)
    n = matrix.cols
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r_idx, p in enumerate(pivots):
            v[p] = -reduced[r_idx, f]
        basis.append(tuple(v))
    return basis


def invert(matrix: RatMatrix) -> RatMatrix:
    """Exact inverse of a square matrix; raises ValueError if singular."""
    if matrix.rows != matrix.cols:
        raise ValueError("only square matrices can be inverted")
    n = matrix.rows
    aug = matrix.hstack(RatMatrix.identity(n))
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    data = tuple(tuple(reduced[i, n + j] for j in range(n)) for i in range(n))
    return RatMatrix(n, n, data)


class Subspace:
    """A linear subspace of R^n with a canonical reduced-column-echelon basis.

    Equal subspaces have identical bases, so equality and hashing are
    structural. The basis matrix has one column per dimension; the zero
    subspace has a 0-column basis.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence[RatLike]] = ()):
        vecs = [vector(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise ValueError("basis vector has wrong length")
        if vecs:
            reduced, pivots = rref(RatMatrix.from_rows(vecs))
            cols = [reduced.row(i) for i in range(len(pivots))]
        else:
            cols = []
        self.ambient_dim = ambient_dim
        self.basis = RatMatrix.from_cols(cols, rows=ambient_dim)

    @staticmethod
    def zero(n: int) -> "Subspace":
        return Subspace(n, ())

    @staticmethod
    def full(n: int) -> "Subspace":
        return Subspace(n, [unit_vector(n, i) for i in range(n)])

    @property
    def dim(self) -> int:
        return self.basis.cols

    def basis_vectors(self) -> list[Vector]:
        return [self.basis.col(j) for j in range(self.basis.cols)]

    def contains(self, v: Sequence[RatLike]) -> bool:
        vv = vector(v)
        if len(vv) != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        if is_zero_vector(vv):
            return True
        if self.dim == 0:
            return False
        stacked = RatMatrix.from_rows(self.basis_vectors() + [vv])
        return rank(stacked) == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.contains(v) for v in other.basis_vectors())

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.ambient_dim, self.basis_vectors() + other.basis_vectors())

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of the stacked orthogonal complements."""
        self._check(other)
        constraints = (self.orthogonal_complement().basis_vectors()
                       + other.orthogonal_complement().basis_vectors())
        if not constraints:
            return Subspace.full(self.ambient_dim)
        return Subspace(self.ambient_dim,
                        kernel_basis(RatMatrix.from_rows(constraints)))

    def orthogonal_complement(self) -> "Subspace":
        if self.dim == 0:
            return Subspace.full(self.ambient_dim)
        rows = RatMatrix.from_rows(self.basis_vectors())
        return Subspace(self.ambient_dim, kernel_basis(rows))

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def is_zero(self) -> bool:
        return self.dim == 0

    def _check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis.data))

    def __repr__(self) -> str:
        vecs = [[rat_str(x) for x in v] for v in self.basis_vectors()]
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, basis={vecs})"


def kernel(matrix: RatMatrix) -> Subspace:
    """The subspace {x : Mx = 0}."""
    return Subspace(matrix.cols, kernel_basis(matrix))
