"""Polyhedral cone algebra tests."""

import random
from fractions import Fraction

import pytest

from conereach.cones import PolyhedralCone, fm_project
from conereach.rational import RatMatrix, Subspace, vec_dot


def random_cone(rng, n, max_gens=6):
    """Random cone from either generators or constraints."""
    count = rng.randint(0, max_gens)
    vecs = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(count)]
    if rng.random() < 0.5:
        lines = [[rng.randint(-2, 2) for _ in range(n)]
                 for _ in range(rng.randint(0, 1))]
        return PolyhedralCone(n, rays=vecs, lines=lines)
    return PolyhedralCone(n, ineqs=vecs)


def test_complete_quadrant_like():
    c = PolyhedralCone(2, rays=[[1, 0], [1, 1]]).complete()
    # H-form of cone{(1,0),(1,1)} is {-x2 <= 0, x2 - x1 <= 0}
    want = PolyhedralCone(2, ineqs=[[0, -1], [-1, 1]])
    assert c.set_equals(want)
    # every ray satisfies every inequality
    for r in c.rays:
        for w in c.ineqs:
            assert vec_dot(w, r) <= 0


def test_complete_full_space():
    c = PolyhedralCone.full(2).complete()
    assert c.rays == ()
    assert len(c.lines) == 2
    assert c.is_full()


def test_complete_zero_cone():
    c = PolyhedralCone.zero(3).complete()
    assert not c.rays and not c.lines
    assert Subspace(3, c.eqs).is_full()
    assert c.is_zero()


def test_polar_orthant():
    orthant = PolyhedralCone(2, rays=[[1, 0], [0, 1]])
    assert orthant.polar().set_equals(orthant.negate())


def test_polar_extremes():
    n = 3
    assert PolyhedralCone.full(n).polar().is_zero()
    assert PolyhedralCone.zero(n).polar().is_full()


def test_polar_single_ray():
    c = PolyhedralCone(2, rays=[[1, 1]])
    p = c.polar()
    assert p.set_equals(PolyhedralCone(2, ineqs=[[1, 1]]))
    for y in p.complete().rays:
        for x in c.complete().rays:
            assert vec_dot(x, y) <= 0


def test_polar_involution_random():
    rng = random.Random(5)
    for _ in range(60):
        c = random_cone(rng, rng.randint(1, 3))
        assert c.polar().polar().set_equals(c)


def test_sum_and_intersect_trivial():
    c = PolyhedralCone(2, rays=[[1, 2]]).complete()
    assert c.sum(PolyhedralCone.zero(2)).set_equals(c)
    assert c.intersect(PolyhedralCone.full(2)).set_equals(c)
    orthant = PolyhedralCone(2, rays=[[1, 0]]).sum(PolyhedralCone(2, rays=[[0, 1]]))
    assert orthant.set_equals(PolyhedralCone(2, rays=[[1, 0], [0, 1]]))


def test_sum_intersect_polar_identities_random():
    rng = random.Random(17)
    for _ in range(40):
        n = rng.randint(1, 3)
        c1, c2 = random_cone(rng, n), random_cone(rng, n)
        lhs = c1.sum(c2).polar()
        rhs = c1.polar().intersect(c2.polar())
        assert lhs.set_equals(rhs)
        lhs2 = c1.intersect(c2).polar()
        rhs2 = c1.polar().sum(c2.polar())
        assert lhs2.set_equals(rhs2)


def test_linear_map_identity_and_projection():
    c = PolyhedralCone(2, rays=[[1, 0], [0, 1]])
    ident = RatMatrix.identity(2)
    assert c.image(ident).set_equals(c)
    assert c.preimage(ident).set_equals(c)
    proj = RatMatrix.from_rows([[1, 0]])
    assert c.image(proj).set_equals(PolyhedralCone(1, rays=[[1]]))


def test_linear_map_swap():
    c = PolyhedralCone(2, rays=[[1, 2]])
    swap = RatMatrix.from_rows([[0, 1], [1, 0]])
    img = c.image(swap)
    assert img.set_equals(PolyhedralCone(2, rays=[[2, 1]]))
    assert img.contains_point([2, 1])


def test_preimage_composition():
    # {x : Mx in R_+^2} with M = [[1,0],[1,1]]
    m = RatMatrix.from_rows([[1, 0], [1, 1]])
    target = PolyhedralCone(2, ineqs=[[-1, 0], [0, -1]])
    pre = target.preimage(m)
    assert pre.contains_point([1, 0])
    assert not pre.contains_point([-1, 0])
    assert pre.contains_point([0, 1])
    rng = random.Random(3)
    for _ in range(20):
        x = (Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4)))
        assert pre.contains_point(x) == target.contains_point(m.apply(x))


def test_lin_span():
    s = PolyhedralCone(2, lines=[[1, 0]])
    assert s.lin() == s.linspan() == Subspace(2, [[1, 0]])
    orthant = PolyhedralCone(2, rays=[[1, 0], [0, 1]])
    assert orthant.lin().is_zero()
    assert orthant.linspan().is_full()
    half = PolyhedralCone(2, ineqs=[[0, -1]])  # x2 >= 0
    assert half.lin() == Subspace(2, [[1, 0]])
    assert half.linspan().is_full()


def test_queries():
    n = 2
    full = PolyhedralCone.full(n)
    assert full.is_full() and not full.is_pointed()
    orthant = PolyhedralCone(n, rays=[[1, 0], [0, 1]])
    assert orthant.is_pointed()
    assert orthant.contains_point([1, 1])
    assert not orthant.contains_point([-1, 0])
    ray = PolyhedralCone(2, rays=[[1, 0]])
    same = PolyhedralCone(2, ineqs=[[0, 1], [0, -1], [-1, 0]])
    assert ray.set_equals(same)


def test_subspace_detection():
    line = PolyhedralCone(2, lines=[[1, 1]])
    assert line.is_subspace()
    assert not PolyhedralCone(2, rays=[[1, 1]]).is_subspace()


def test_lin_polar_relation_random():
    # lin(C) = orthogonal complement of Lin(C^-)
    rng = random.Random(29)
    for _ in range(30):
        c = random_cone(rng, rng.randint(1, 3))
        lhs = c.lin()
        rhs = c.polar().linspan().orthogonal_complement()
        assert lhs == rhs


def test_degenerate_inputs_pruned():
    c = PolyhedralCone(2, rays=[[1, 0], [2, 0], [0, 0], [1, 1], [1, 2], [0, 1]])
    cc = c.complete()
    # only the extreme rays survive
    assert cc.rays == ((Fraction(0), Fraction(1)), (Fraction(1), Fraction(0)))


def test_mutual_membership_check():
    with pytest.raises(ValueError):
        PolyhedralCone(2, rays=[[1, 1]], ineqs=[[1, 0]])


def test_canonical_forms_equal_for_equal_sets():
    a = PolyhedralCone(2, rays=[[1, 0], [1, 1], [1, 2], [0, 1]]).complete()
    b = PolyhedralCone(2, ineqs=[[0, -1], [-1, 0]]).complete()
    assert a.rays == b.rays and a.lines == b.lines
    assert a.ineqs == b.ineqs and a.eqs == b.eqs


def test_fm_project_matches_generator_image():
    rng = random.Random(41)
    for _ in range(25):
        n = rng.randint(2, 4)
        c = random_cone(rng, n)
        k = rng.randint(1, n - 1)
        keep = sorted(rng.sample(range(n), k))
        via_fm = fm_project(c, keep)
        via_image = c.project(keep)
        assert via_fm.set_equals(via_image)


def test_signed_permutation():
    c = PolyhedralCone(2, rays=[[1, 2]]).complete()
    swapped = c.signed_permutation([1, 0])
    assert swapped.set_equals(PolyhedralCone(2, rays=[[2, 1]]))
    flipped = c.negate()
    assert flipped.set_equals(PolyhedralCone(2, rays=[[-1, -2]]))


def test_dimension_mismatch_errors():
    with pytest.raises(ValueError):
        PolyhedralCone(2, rays=[[1, 0]]).sum(PolyhedralCone(3, rays=[[1, 0, 0]]))
    with pytest.raises(ValueError):
        PolyhedralCone(2, rays=[[1, 0, 0]])
