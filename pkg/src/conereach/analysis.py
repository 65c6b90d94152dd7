"""Reachability / null-controllability deciders with certified verdicts.

Reachability (under dom(H) + R- = R^n): holds iff R+ = R^n and the dual
process has no nonnegative eigenvalue. Null-controllability (under
dom(H) + R- = R+ = im(H) + N- = R^n): holds iff the dual process has no
positive eigenvalue. Verdicts carry the assumption checks and, for FAILS, a
sound obstruction certificate (an eigenpair verified by exact graph
membership, or a basis of the deficient R+); INDETERMINATE propagates
unresolved spectral intervals instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .cones import PolyhedralCone
from .linreach import reach_subspace
from .process import ConvexProcess
from .rational import Subspace, rat_str
from .spectral import (
    EigenConstraint, EigenReport, EigenStatus, eigen_exists, verify_eigenpair,
    _alg_json,
)


class Property(Enum):
    REACHABILITY = "REACHABILITY"
    NULL_CONTROLLABILITY = "NULL_CONTROLLABILITY"


class Result(Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    INDETERMINATE = "INDETERMINATE"
    ASSUMPTIONS_VIOLATED = "ASSUMPTIONS_VIOLATED"


@dataclass
class AssumptionCheck:
    name: str
    satisfied: bool
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"name": self.name, "satisfied": self.satisfied}
        if self.witness:
            out["witness"] = self.witness
        return out


@dataclass
class Verdict:
    property: Property
    result: Result
    assumptions: list[AssumptionCheck]
    certificate: Optional[dict] = None
    steps: dict = field(default_factory=dict)
    notes: str = ""

    def to_json(self) -> dict:
        return {
            "property": self.property.value,
            "result": self.result.value,
            "assumptions": [a.to_json() for a in self.assumptions],
            "certificate": self.certificate,
            "steps": self.steps,
            "notes": self.notes,
        }

    @staticmethod
    def from_json(data: dict) -> "Verdict":
        return Verdict(
            property=Property(data["property"]),
            result=Result(data["result"]),
            assumptions=[AssumptionCheck(a["name"], a["satisfied"], a.get("witness", {}))
                         for a in data["assumptions"]],
            certificate=data.get("certificate"),
            steps=data.get("steps", {}),
            notes=data.get("notes", ""),
        )


@dataclass
class ProcessInvariants:
    """The linear-envelope subspaces every check relies on."""

    r_minus: Subspace
    r_plus: Subspace
    n_minus: Subspace
    steps: dict

    @staticmethod
    def compute(process: ConvexProcess) -> "ProcessInvariants":
        lm, lp = process.linear_bounds()
        r_minus, s1 = reach_subspace(lm)
        r_plus, s2 = reach_subspace(lp)
        n_minus, s3 = reach_subspace(lm, backward=True)
        return ProcessInvariants(r_minus, r_plus, n_minus,
                                 {"r_minus": s1, "r_plus": s2, "n_minus": s3})


def _subspace_json(s: Subspace) -> list[list[str]]:
    return [[rat_str(x) for x in v] for v in s.basis_vectors()]


def _cone_plus_subspace_full(cone: PolyhedralCone, s: Subspace) -> bool:
    return cone.sum(PolyhedralCone.from_subspace(s)).is_full()


def check_assumptions(process: ConvexProcess, prop: Property,
                      inv: ProcessInvariants | None = None) -> list[AssumptionCheck]:
    """Exact evaluation of the hypotheses the spectral criterion needs."""
    if inv is None:
        inv = ProcessInvariants.compute(process)
    checks = [AssumptionCheck(
        "dom(H) + R_-(H) = R^n",
        _cone_plus_subspace_full(process.dom(), inv.r_minus),
        {"R_minus_basis": _subspace_json(inv.r_minus)},
    )]
    if prop is Property.NULL_CONTROLLABILITY:
        checks.append(AssumptionCheck(
            "R_+(H) = R^n",
            inv.r_plus.is_full(),
            {"R_plus_basis": _subspace_json(inv.r_plus)},
        ))
        checks.append(AssumptionCheck(
            "im(H) + N_-(H) = R^n",
            _cone_plus_subspace_full(process.im(), inv.n_minus),
            {"N_minus_basis": _subspace_json(inv.n_minus)},
        ))
    return checks


def _eigen_certificate(process_dual: ConvexProcess, report: EigenReport) -> dict:
    witness = report.witnesses[0]
    assert verify_eigenpair(process_dual, witness), \
        "internal error: eigenpair certificate failed exact re-verification"
    return {"type": "dual_eigenpair", **witness.to_json()}


def _indeterminate_certificate(report: EigenReport) -> dict:
    return {"type": "unresolved_intervals",
            "intervals": [_alg_json(a) for a in report.unresolved]}


def check_reachability(process: ConvexProcess, refine_depth: int = 64) -> Verdict:
    """Spectral reachability decision with certificates."""
    inv = ProcessInvariants.compute(process)
    assumptions = check_assumptions(process, Property.REACHABILITY, inv)
    if not all(a.satisfied for a in assumptions):
        return Verdict(Property.REACHABILITY, Result.ASSUMPTIONS_VIOLATED,
                       assumptions, steps=inv.steps,
                       notes="hypotheses unsatisfied; the spectral criterion does not apply")
    if not inv.r_plus.is_full():
        return Verdict(Property.REACHABILITY, Result.FAILS, assumptions,
                       certificate={"type": "r_plus_deficient",
                                    "basis": _subspace_json(inv.r_plus),
                                    "dim": inv.r_plus.dim},
                       steps=inv.steps,
                       notes="R_+ is a proper subspace, so the reachable set cannot be R^n")
    dual = process.dual()
    report = eigen_exists(dual, EigenConstraint.LAMBDA_GEQ_0, refine_depth=refine_depth)
    if report.status is EigenStatus.EXISTS:
        return Verdict(Property.REACHABILITY, Result.FAILS, assumptions,
                       certificate=_eigen_certificate(dual, report),
                       steps=inv.steps,
                       notes="the dual process has a nonnegative eigenvalue")
    if report.status is EigenStatus.INDETERMINATE:
        return Verdict(Property.REACHABILITY, Result.INDETERMINATE, assumptions,
                       certificate=_indeterminate_certificate(report),
                       steps=inv.steps,
                       notes="spectral decision unresolved; raise the refinement depth")
    return Verdict(Property.REACHABILITY, Result.HOLDS, assumptions,
                   steps=inv.steps,
                   notes="R_+ = R^n and the dual process has no nonnegative eigenvalue")


def check_null_controllability(process: ConvexProcess, refine_depth: int = 64) -> Verdict:
    """Spectral null-controllability decision with certificates."""
    inv = ProcessInvariants.compute(process)
    assumptions = check_assumptions(process, Property.NULL_CONTROLLABILITY, inv)
    if not all(a.satisfied for a in assumptions):
        return Verdict(Property.NULL_CONTROLLABILITY, Result.ASSUMPTIONS_VIOLATED,
                       assumptions, steps=inv.steps,
                       notes="hypotheses unsatisfied; the spectral criterion does not apply")
    dual = process.dual()
    report = eigen_exists(dual, EigenConstraint.LAMBDA_GT_0, refine_depth=refine_depth)
    if report.status is EigenStatus.EXISTS:
        return Verdict(Property.NULL_CONTROLLABILITY, Result.FAILS, assumptions,
                       certificate=_eigen_certificate(dual, report),
                       steps=inv.steps,
                       notes="the dual process has a positive eigenvalue")
    if report.status is EigenStatus.INDETERMINATE:
        return Verdict(Property.NULL_CONTROLLABILITY, Result.INDETERMINATE, assumptions,
                       certificate=_indeterminate_certificate(report),
                       steps=inv.steps,
                       notes="spectral decision unresolved; raise the refinement depth")
    return Verdict(Property.NULL_CONTROLLABILITY, Result.HOLDS, assumptions,
                   steps=inv.steps,
                   notes="the dual process has no positive eigenvalue")
