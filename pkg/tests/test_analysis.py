"""Verdict tests for the reachability / null-controllability deciders."""

from fractions import Fraction

from conereach.analysis import (
    Property, Result, Verdict, check_assumptions, check_null_controllability,
    check_reachability,
)
from conereach.cones import PolyhedralCone
from conereach.process import ConvexProcess
from conereach.rational import RatMatrix
from conereach.spectral import EigenWitness, verify_eigenpair


def scalar_example():
    a = RatMatrix.from_rows([[1]])
    b = RatMatrix.from_rows([[1]])
    c = RatMatrix.from_rows([[1], [0]])
    d = RatMatrix.from_rows([[0], [1]])
    y = PolyhedralCone(2, ineqs=[[-1, 0]])
    return ConvexProcess.from_constrained_system(a, b, c, d, y)


def hbar():
    return ConvexProcess(1, PolyhedralCone(2, ineqs=[[0, -1]]))


def test_assumptions_scalar_example():
    h = scalar_example()
    checks = check_assumptions(h, Property.REACHABILITY)
    assert len(checks) == 1
    assert checks[0].satisfied
    assert checks[0].name == "dom(H) + R_-(H) = R^n"
    # R_- = R, reported in the witness
    assert checks[0].witness["R_minus_basis"] == [["1"]]


def test_assumptions_hbar_null():
    checks = check_assumptions(hbar(), Property.NULL_CONTROLLABILITY)
    assert all(c.satisfied for c in checks)
    names = [c.name for c in checks]
    assert names == ["dom(H) + R_-(H) = R^n", "R_+(H) = R^n", "im(H) + N_-(H) = R^n"]


def test_assumptions_identity():
    ident = ConvexProcess.identity(2)
    checks = check_assumptions(ident, Property.NULL_CONTROLLABILITY)
    by_name = {c.name: c.satisfied for c in checks}
    assert by_name["dom(H) + R_-(H) = R^n"]        # dom = R^n
    assert not by_name["R_+(H) = R^n"]             # R_+ = {0}


def test_reachability_scalar_example_holds():
    verdict = check_reachability(scalar_example())
    assert verdict.result is Result.HOLDS
    assert all(a.satisfied for a in verdict.assumptions)


def test_reachability_hbar_fails_with_eigenpair():
    verdict = check_reachability(hbar())
    assert verdict.result is Result.FAILS
    cert = verdict.certificate
    assert cert["type"] == "dual_eigenpair"
    assert cert["lambda"] == "0"
    assert cert["xi"] == ["-1"]
    witness = EigenWitness(Fraction(0), (Fraction(-1),))
    assert verify_eigenpair(hbar().dual(), witness)


def test_reachability_identity_fails_on_r_plus():
    verdict = check_reachability(ConvexProcess.identity(2))
    assert verdict.result is Result.FAILS
    assert verdict.certificate["type"] == "r_plus_deficient"
    assert verdict.certificate["basis"] == []


def test_null_controllability_hbar_holds():
    verdict = check_null_controllability(hbar())
    assert verdict.result is Result.HOLDS


def test_null_controllability_contraction_assumptions_violated():
    # H(x) = {x/2}: R_+ = {0} != R, so the theorem does not apply
    h = ConvexProcess.from_matrix(RatMatrix.from_rows([[Fraction(1, 2)]]))
    verdict = check_null_controllability(h)
    assert verdict.result is Result.ASSUMPTIONS_VIOLATED
    failed = [a for a in verdict.assumptions if not a.satisfied]
    assert [a.name for a in failed] == ["R_+(H) = R^n"]


def test_null_controllability_doubling_assumptions_violated():
    # same assumption profile as the contraction: R_+ = {0}
    h = ConvexProcess.from_matrix(RatMatrix.from_rows([[2]]))
    verdict = check_null_controllability(h)
    assert verdict.result is Result.ASSUMPTIONS_VIOLATED


def test_null_controllability_fails_with_positive_eigenvalue():
    # x+ = 2x with a free input channel appended keeps R_+ full but the dual
    # of the pure doubling channel... use H(x) = {2x + u : u >= 0}
    a = RatMatrix.from_rows([[2]])
    b = RatMatrix.from_rows([[1]])
    y = PolyhedralCone(1, ineqs=[[-1]])  # u >= 0
    h = ConvexProcess.from_constrained_system(
        a, b, RatMatrix.zeros(1, 1), RatMatrix.identity(1), y)
    verdict = check_null_controllability(h)
    assert verdict.result is Result.FAILS
    assert verdict.certificate["type"] == "dual_eigenpair"


def test_verdict_json_roundtrip():
    for verdict in (check_reachability(hbar()),
                    check_null_controllability(hbar()),
                    check_reachability(scalar_example())):
        data = verdict.to_json()
        again = Verdict.from_json(data)
        assert again == verdict


def test_degenerate_processes():
    # full graph: every transition allowed, both properties hold
    full = ConvexProcess(1, PolyhedralCone.full(2))
    assert check_reachability(full).result is Result.HOLDS
    assert check_null_controllability(full).result is Result.HOLDS
    # zero graph: dom = {0}, the hypotheses cannot hold
    empty = ConvexProcess(1, PolyhedralCone.zero(2))
    assert check_reachability(empty).result is Result.ASSUMPTIONS_VIOLATED
