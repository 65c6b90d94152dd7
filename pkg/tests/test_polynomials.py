"""Polynomial, root isolation, and Q(alpha) arithmetic tests."""

import random
from fractions import Fraction

import pytest

from conereach.polynomials import (
    AlgebraicContext, AlgebraicNumber, Poly, RefinementExhausted, cmp_roots,
    interval_eval, isolate_roots_in,
)


def P(*coeffs):
    return Poly.from_coeffs(coeffs)


def test_poly_arithmetic():
    p = P(1, 2)       # 1 + 2x
    q = P(-1, 0, 1)   # x^2 - 1
    assert (p * q).coeffs == P(-1, -2, 1, 2).coeffs
    assert (p + q).coeffs == P(0, 2, 1).coeffs
    assert q(Fraction(3)) == 8
    assert q.derivative().coeffs == P(0, 2).coeffs


def test_divmod_and_gcd():
    p = P(-2, 0, 1)  # x^2 - 2
    q = P(1, 1)      # x + 1
    quo, rem = p.divmod(q)
    assert (quo * q + rem).coeffs == p.coeffs
    a = P(-1, 0, 1)          # (x-1)(x+1)
    b = P(-1, 1) * P(3, 1)   # (x-1)(x+3)
    assert a.gcd(b).coeffs == P(-1, 1).coeffs


def test_squarefree_part():
    p = P(-1, 1) * P(-1, 1) * P(2, 1)
    sf = p.squarefree_part()
    assert sf.degree == 2
    assert sf(Fraction(1)) == 0 and sf(Fraction(-2)) == 0


def test_count_roots():
    p = P(-2, 0, 1)  # roots +-sqrt(2)
    assert p.count_roots_open(Fraction(0), Fraction(2)) == 1
    assert p.count_roots_open(Fraction(-2), Fraction(2)) == 2
    assert p.count_roots_open(Fraction(2), Fraction(10)) == 0


def test_isolate_roots():
    # (x-1)(x-2)(x-3), squarefree
    p = P(-6, 11, -6, 1)
    ivs = isolate_roots_in(p, Fraction(0), Fraction(4))
    assert len(ivs) == 3
    roots = [Fraction(1), Fraction(2), Fraction(3)]
    for (lo, hi), r in zip(ivs, roots):
        assert lo < r < hi


def test_isolate_root_at_midpoint():
    # root exactly at the first bisection point of (0, 4)
    p = P(-2, 1) * P(-3, 1)
    ivs = isolate_roots_in(p, Fraction(0), Fraction(4))
    assert len(ivs) == 2


def test_factor_irreducible():
    p = P(-2, 0, 1) * P(-1, 1) * P(-1, 1)
    factors = p.factor_irreducible()
    keys = sorted(f.coeffs for f in factors)
    assert keys == sorted([P(-1, 1).coeffs, P(-2, 0, 1).coeffs])


def test_cauchy_bound():
    p = P(-2, 0, 1)
    b = p.cauchy_bound()
    assert p.count_roots_open(-b, b) == 2


def test_algebraic_number_sqrt2():
    alpha = AlgebraicNumber(P(-2, 0, 1), Fraction(1), Fraction(2))
    assert alpha.cmp_fraction(Fraction(7, 5)) == 1      # sqrt2 > 1.4
    assert alpha.cmp_fraction(Fraction(3, 2)) == -1     # sqrt2 < 1.5
    assert abs(alpha.to_float() - 2 ** 0.5) < 1e-9


def test_algebraic_number_ordering():
    sqrt2 = AlgebraicNumber(P(-2, 0, 1), Fraction(1), Fraction(2))
    sqrt3 = AlgebraicNumber(P(-3, 0, 1), Fraction(1), Fraction(2))
    assert sqrt2.cmp(sqrt3) == -1
    # same value through overlapping intervals
    a = AlgebraicNumber(P(-2, 0, 1), Fraction(0), Fraction(2))
    b = AlgebraicNumber(P(-2, 0, 1), Fraction(1), Fraction(3, 2))
    assert a.cmp(b) == 0
    assert cmp_roots(Fraction(1), sqrt2) == -1
    assert cmp_roots(sqrt2, Fraction(1)) == 1


def test_interval_eval_contains_value():
    p = P(1, -3, 2)
    lo, hi = interval_eval(p.coeffs, Fraction(1, 3), Fraction(1, 2))
    val = p(Fraction(2, 5))
    assert lo <= val <= hi


def test_alg_elem_field_ops():
    alpha = AlgebraicNumber(P(-2, 0, 1), Fraction(1), Fraction(2))
    ctx = AlgebraicContext(alpha)
    a = ctx.generator()          # sqrt(2)
    assert (a * a).coeffs == (Fraction(2),)
    inv = a.inverse()
    assert (a * inv).coeffs == (Fraction(1),)
    # sqrt2/2 = 1/sqrt2
    assert (a / 2) == inv
    assert (a - a).sign() == 0
    assert a.sign() == 1
    assert (-a).sign() == -1
    assert (a - 1) > 0
    assert (a - 2) < 0
    assert (1 - a) < 0
    assert abs(a.to_float() - 2 ** 0.5) < 1e-9


def test_alg_elem_comparisons_mixed():
    alpha = AlgebraicNumber(P(-2, 0, 1), Fraction(1), Fraction(2))
    ctx = AlgebraicContext(alpha)
    a = ctx.generator()
    assert a > 1 and a < 2 and a != 1
    assert a > Fraction(7, 5)
    three_halves = ctx.from_rat(Fraction(3, 2))
    assert a < three_halves


def test_refinement_exhaustion():
    alpha = AlgebraicNumber(P(-2, 0, 1), Fraction(1), Fraction(2))
    ctx = AlgebraicContext(alpha, refine_depth=0)
    a = ctx.generator()
    with pytest.raises(RefinementExhausted):
        (a - Fraction(1414213562373095, 10 ** 15)).sign()


def test_random_eval_consistency():
    rng = random.Random(3)
    for _ in range(20):
        coeffs = [Fraction(rng.randint(-4, 4)) for _ in range(rng.randint(1, 5))]
        p = Poly.from_coeffs(coeffs)
        if p.is_zero():
            continue
        sf = p.squarefree_part()
        b = sf.cauchy_bound()
        ivs = isolate_roots_in(sf, -b, b)
        # each isolating interval shows a sign change
        for lo, hi in ivs:
            assert sf(lo) * sf(hi) < 0
