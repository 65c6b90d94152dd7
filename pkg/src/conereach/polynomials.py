"""Exact univariate polynomials, Sturm root isolation, and Q(alpha) arithmetic.

Polynomials carry Fraction coefficients (low degree first). Real roots are
isolated by bisection with Sturm counts; irreducible factorisation (the one
piece delegated to sympy) turns isolated roots into algebraic numbers with a
minimal polynomial, over which exact field arithmetic is available: sign
tests are resolved by adaptive refinement of the isolating interval with
rational interval arithmetic, so no comparison is ever approximate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Sequence, Union

import sympy

from .rational import Rat, RatLike, rat, rat_str


class RefinementExhausted(Exception):
    """A sign test at an algebraic number exceeded the bisection budget."""

    def __init__(self, number: "AlgebraicNumber", depth: int):
        super().__init__(f"sign undecided after {depth} bisections of {number}")
        self.number = number
        self.depth = depth


def _strip(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    k = len(coeffs)
    while k > 0 and coeffs[k - 1] == 0:
        k -= 1
    return tuple(coeffs[:k])


@dataclass(frozen=True)
class Poly:
    """Univariate polynomial over Q, coefficients low degree first."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def from_coeffs(coeffs: Iterable[RatLike]) -> "Poly":
        return Poly(_strip([rat(c) for c in coeffs]))

    @staticmethod
    def constant(c: RatLike) -> "Poly":
        return Poly.from_coeffs([c])

    @staticmethod
    def x() -> "Poly":
        return Poly((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(_strip(out))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: Union["Poly", RatLike]) -> "Poly":
        if not isinstance(other, Poly):
            c = rat(other)
            return Poly(_strip([c * a for a in self.coeffs]))
        if self.is_zero() or other.is_zero():
            return Poly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(_strip(out))

    __rmul__ = __mul__

    def __call__(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(_strip([i * c for i, c in enumerate(self.coeffs)][1:]))

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        r = list(self.coeffs)
        d, lc = other.degree, other.leading
        while len(r) - 1 >= d and _strip(r):
            r = list(_strip(r))
            if len(r) - 1 < d:
                break
            k = len(r) - 1 - d
            f = r[-1] / lc
            q[k] = f
            for i, c in enumerate(other.coeffs):
                r[k + i] -= f * c
            r = r[:-1]
        return Poly(_strip(q)), Poly(_strip(r))

    def rem(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lc = self.leading
        return Poly(tuple(c / lc for c in self.coeffs))

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.rem(b)
        return a.monic()

    def squarefree_part(self) -> "Poly":
        if self.degree <= 1:
            return self.monic()
        g = self.gcd(self.derivative())
        if g.degree <= 0:
            return self.monic()
        return self.divmod(g)[0].monic()

    def primitive(self) -> "Poly":
        """Canonical representative: integer coefficients, content 1, positive leading."""
        if self.is_zero():
            return self
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // int_gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = int_gcd(g, abs(v))
        ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return Poly(tuple(Fraction(v) for v in ints))

    def cauchy_bound(self) -> Fraction:
        """B such that every real root lies in (-B, B)."""
        if self.degree < 1:
            return Fraction(1)
        lc = abs(self.leading)
        m = max((abs(c) for c in self.coeffs[:-1]), default=Fraction(0))
        return Fraction(1) + m / lc

    def sturm_chain(self) -> list["Poly"]:
        chain = [self, self.derivative()]
        while not chain[-1].is_zero():
            chain.append(-chain[-2].rem(chain[-1]))
        return chain[:-1]

    def count_roots_open(self, lo: Fraction, hi: Fraction,
                         chain: list["Poly"] | None = None) -> int:
        """Number of distinct real roots in the open interval (lo, hi).

        Requires p(lo) != 0 and p(hi) != 0.
        """
        if self(lo) == 0 or self(hi) == 0:
            raise ValueError("Sturm count endpoints must not be roots")
        if lo >= hi:
            return 0
        if chain is None:
            chain = self.squarefree_part().sturm_chain()
        return (_variations([p(lo) for p in chain])
                - _variations([p(hi) for p in chain]))

    def factor_irreducible(self) -> list["Poly"]:
        """Distinct irreducible factors over Q (monicity not enforced; canonical primitive)."""
        if self.degree < 1:
            return []
        x = sympy.Symbol("x")
        expr = sum(sympy.Rational(c.numerator, c.denominator) * x ** i
                   for i, c in enumerate(self.coeffs))
        _, factors = sympy.factor_list(expr, x)
        out = []
        for f, _mult in factors:
            p = sympy.Poly(f, x)
            coeffs = list(reversed(p.all_coeffs()))
            poly = Poly.from_coeffs([Fraction(c.p, c.q) for c in coeffs]).primitive()
            if poly.degree >= 1:
                out.append(poly)
        return out

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(rat_str(c))
            elif i == 1:
                parts.append(f"{rat_str(c)}*x")
            else:
                parts.append(f"{rat_str(c)}*x^{i}")
        return " + ".join(parts)


def _variations(values: Sequence[Fraction]) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


RootSpec = Union[Fraction, "AlgebraicNumber"]


def isolate_roots_in(poly: Poly, lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Isolating open subintervals of (lo, hi), one distinct real root each.

    ``poly`` must be squarefree with poly(lo) != 0 and poly(hi) != 0. When a
    bisection point happens to be a root it is perturbed (a polynomial has
    finitely many roots, so a nearby non-root split point always exists).
    """
    chain = poly.sturm_chain()
    out: list[tuple[Fraction, Fraction]] = []

    def split_point(a: Fraction, b: Fraction) -> Fraction:
        mid = (a + b) / 2
        shift = (b - a) / 4
        while poly(mid) == 0:
            mid += shift
            shift /= 2
        return mid

    def recurse(a: Fraction, b: Fraction) -> None:
        count = poly.count_roots_open(a, b, chain)
        if count == 0:
            return
        if count == 1:
            out.append((a, b))
            return
        mid = split_point(a, b)
        recurse(a, mid)
        recurse(mid, b)

    recurse(lo, hi)
    return sorted(out)


class AlgebraicNumber:
    """A real algebraic number: an irreducible minimal polynomial plus an
    isolating open interval (lo, hi) containing exactly one of its roots.

    The interval only ever shrinks (refinement), so instances denote a fixed
    real number while their enclosure tightens on demand.
    """

    __slots__ = ("minpoly", "lo", "hi", "_chain")

    def __init__(self, minpoly: Poly, lo: Fraction, hi: Fraction):
        minpoly = minpoly.primitive()
        if minpoly.degree < 2:
            raise ValueError("rational values should stay Fractions")
        if minpoly(lo) == 0 or minpoly(hi) == 0:
            raise ValueError("isolating interval endpoints must not be roots")
        self.minpoly = minpoly
        self.lo = lo
        self.hi = hi
        self._chain = minpoly.sturm_chain()
        if self._count(lo, hi) != 1:
            raise ValueError("interval does not isolate exactly one root")

    def _count(self, a: Fraction, b: Fraction) -> int:
        return self.minpoly.count_roots_open(a, b, self._chain)

    def refine(self) -> None:
        """Halve the isolating interval."""
        mid = (self.lo + self.hi) / 2
        # minpoly is irreducible of degree >= 2, so mid is never a root
        if self._count(self.lo, mid) == 1:
            self.hi = mid
        else:
            self.lo = mid

    def refine_below(self, width: Fraction) -> None:
        while self.hi - self.lo > width:
            self.refine()

    def cmp_fraction(self, r: Fraction) -> int:
        """-1, +1 as self < r or self > r (equality impossible)."""
        while True:
            if r <= self.lo:
                return 1
            if r >= self.hi:
                return -1
            self.refine()

    def cmp(self, other: "AlgebraicNumber") -> int:
        if self is other:
            return 0
        while True:
            if self.hi <= other.lo:
                return -1
            if other.hi <= self.lo:
                return 1
            if self.minpoly == other.minpoly:
                a = max(self.lo, other.lo)
                b = min(self.hi, other.hi)
                if a < b and self.minpoly(a) != 0 and self.minpoly(b) != 0 \
                        and self._count(a, b) == 1:
                    return 0
            self.refine()
            other.refine()

    def to_float(self) -> float:
        self.refine_below(Fraction(1, 1 << 30))
        return float((self.lo + self.hi) / 2)

    def __repr__(self) -> str:
        return f"AlgebraicNumber({self.minpoly}, ({rat_str(self.lo)}, {rat_str(self.hi)}))"


def cmp_roots(a: RootSpec, b: RootSpec) -> int:
    """Total order over mixed rational / algebraic values."""
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return (a > b) - (a < b)
    if isinstance(a, Fraction):
        return -b.cmp_fraction(a)
    if isinstance(b, Fraction):
        return a.cmp_fraction(b)
    return a.cmp(b)


def _interval_mul(a: tuple[Fraction, Fraction], b: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    products = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(products), max(products)


def interval_eval(coeffs: Sequence[Fraction], lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Enclosure of the polynomial's range over [lo, hi] (Horner, exact rational bounds)."""
    acc = (Fraction(0), Fraction(0))
    for c in reversed(coeffs):
        acc = _interval_mul(acc, (lo, hi))
        acc = (acc[0] + c, acc[1] + c)
    return acc


class AlgebraicContext:
    """The field Q(alpha) for a fixed algebraic alpha, with a sign oracle.

    Elements are polynomials in alpha of degree < deg(minpoly). Because the
    minimal polynomial is irreducible, a nonzero representative always has a
    nonzero value, so sign determination by interval refinement terminates
    unless the configured bisection depth is exhausted.
    """

    def __init__(self, alpha: AlgebraicNumber, refine_depth: int = 64):
        self.alpha = alpha
        self.refine_depth = refine_depth
        self.minpoly = alpha.minpoly

    def element(self, coeffs: Iterable[RatLike]) -> "AlgElem":
        poly = Poly.from_coeffs(coeffs).rem(self.minpoly)
        return AlgElem(self, poly.coeffs)

    def generator(self) -> "AlgElem":
        return self.element([0, 1])

    def from_rat(self, value: RatLike) -> "AlgElem":
        return self.element([rat(value)])

    def sign(self, coeffs: tuple[Fraction, ...]) -> int:
        if not coeffs:
            return 0
        for _ in range(self.refine_depth + 1):
            lo, hi = interval_eval(coeffs, self.alpha.lo, self.alpha.hi)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            self.alpha.refine()
        raise RefinementExhausted(self.alpha, self.refine_depth)


class AlgElem:
    """An element of Q(alpha); supports field arithmetic and exact comparisons."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: AlgebraicContext, coeffs: tuple[Fraction, ...]):
        self.ctx = ctx
        self.coeffs = _strip(coeffs)

    def _coerce(self, other) -> "AlgElem | None":
        if isinstance(other, AlgElem):
            if other.ctx is not self.ctx:
                raise ValueError("mixing elements of different algebraic contexts")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.from_rat(other)
        return None

    def _poly(self) -> Poly:
        return Poly(self.coeffs)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgElem(self.ctx, (self._poly() + o._poly()).coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgElem(self.ctx, (self._poly() - o._poly()).coeffs)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgElem(self.ctx, (o._poly() - self._poly()).coeffs)

    def __neg__(self):
        return AlgElem(self.ctx, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgElem(self.ctx, (self._poly() * o._poly()).rem(self.ctx.minpoly).coeffs)

    __rmul__ = __mul__

    def inverse(self) -> "AlgElem":
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero in Q(alpha)")
        # extended Euclid: u*self + v*minpoly = 1 (gcd is 1: minpoly irreducible)
        r0, r1 = self.ctx.minpoly, self._poly()
        s0, s1 = Poly(()), Poly.constant(1)
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        if r0.degree != 0:
            raise ArithmeticError("minimal polynomial is not irreducible")
        inv = s0 * (Fraction(1) / r0.coeffs[0])
        return AlgElem(self.ctx, inv.rem(self.ctx.minpoly).coeffs)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def sign(self) -> int:
        return self.ctx.sign(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return eq
        return not eq

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    def to_float(self) -> float:
        self.ctx.alpha.refine_below(Fraction(1, 1 << 30))
        mid = (self.ctx.alpha.lo + self.ctx.alpha.hi) / 2
        return float(self._poly()(mid))

    def __repr__(self) -> str:
        return f"AlgElem({self._poly()})"

    def __hash__(self):
        return hash(self.coeffs)
