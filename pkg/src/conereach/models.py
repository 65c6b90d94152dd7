"""Wire-format schemas: system files, cones, verdicts, service payloads.

The JSON grammar is shared by the CLI and the HTTP service. Rationals travel
as "p/q" or integer strings (plain JSON integers are accepted on input);
cones are objects with any subset of {rays, lines, ineqs, eqs}; a system is
either constrained-dynamics matrices {A, B, C, D, Y} or a direct graph cone
with its state dimension n.
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .cones import PolyhedralCone
from .process import ConvexProcess
from .rational import RatMatrix, rat

RatScalar = Union[int, str]
Matrix = list[list[RatScalar]]


def _check_rationals(rows: Matrix, where: str) -> None:
    for i, row in enumerate(rows):
        for j, entry in enumerate(row):
            try:
                rat(entry)
            except (ValueError, TypeError, ZeroDivisionError) as exc:
                raise ValueError(f"{where}[{i}][{j}]: {entry!r} is not a rational") from exc


class ConeModel(BaseModel):
    """JSON cone: any subset of the four description keys.

    With no constraint keys and no generator keys the cone is the full space;
    an explicitly empty generator list (and no constraints) is the zero cone.
    """

    model_config = ConfigDict(extra="forbid")

    rays: Optional[Matrix] = None
    lines: Optional[Matrix] = None
    ineqs: Optional[Matrix] = None
    eqs: Optional[Matrix] = None

    @model_validator(mode="after")
    def _validate_entries(self):
        for name in ("rays", "lines", "ineqs", "eqs"):
            value = getattr(self, name)
            if value is not None:
                _check_rationals(value, name)
        return self

    def to_cone(self, ambient: int, where: str = "cone") -> PolyhedralCone:
        for name in ("rays", "lines", "ineqs", "eqs"):
            value = getattr(self, name)
            if value is None:
                continue
            for i, vec in enumerate(value):
                if len(vec) != ambient:
                    raise ValueError(
                        f"{where}.{name}[{i}]: expected {ambient} entries, got {len(vec)}")
        has_v = self.rays is not None or self.lines is not None
        has_h = self.ineqs is not None or self.eqs is not None
        if not has_v and not has_h:
            return PolyhedralCone.full(ambient)
        kwargs = {}
        if has_v:
            kwargs["rays"] = self.rays or []
            kwargs["lines"] = self.lines or []
        if has_h:
            kwargs["ineqs"] = self.ineqs or []
            kwargs["eqs"] = self.eqs or []
        return PolyhedralCone(ambient, **kwargs)

    @staticmethod
    def from_cone(cone: PolyhedralCone) -> "ConeModel":
        return ConeModel(**cone.to_dict())


class SystemModel(BaseModel):
    """Constrained linear dynamics x+ = Ax + Bu with Cx + Du in Y."""

    model_config = ConfigDict(extra="forbid")

    A: Matrix
    B: Matrix
    C: Matrix
    D: Matrix
    Y: ConeModel

    @model_validator(mode="after")
    def _validate_shapes(self):
        for name in ("A", "B", "C", "D"):
            rows = getattr(self, name)
            if not rows:
                raise ValueError(f"system.{name}: matrix must have at least one row")
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError(f"system.{name}: ragged rows")
            _check_rationals(rows, f"system.{name}")
        n = len(self.A)
        if len(self.A[0]) != n:
            raise ValueError(f"system.A: expected square matrix, got {n}x{len(self.A[0])}")
        if len(self.B) != n:
            raise ValueError(f"system.B: expected {n} rows, got {len(self.B)}")
        m = len(self.B[0])
        p = len(self.C)
        if len(self.C[0]) != n:
            raise ValueError(f"system.C: expected {n} columns, got {len(self.C[0])}")
        if len(self.D) != p or len(self.D[0]) != m:
            raise ValueError(
                f"system.D: expected {p}x{m}, got {len(self.D)}x{len(self.D[0])}")
        return self

    def to_process(self) -> ConvexProcess:
        a = RatMatrix.from_rows(self.A)
        b = RatMatrix.from_rows(self.B)
        c = RatMatrix.from_rows(self.C)
        d = RatMatrix.from_rows(self.D)
        y = self.Y.to_cone(c.rows, where="system.Y")
        return ConvexProcess.from_constrained_system(a, b, c, d, y)


class OptionsModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    max_steps: Optional[int] = Field(default=None, ge=0)
    refine_depth: Optional[int] = Field(default=None, ge=0)
    checks: Optional[list[Literal["reach", "null"]]] = None


class SystemFileModel(BaseModel):
    """Top-level input: exactly one of {system, graph}; graph needs n."""

    model_config = ConfigDict(extra="forbid")

    n: Optional[int] = Field(default=None, ge=1)
    system: Optional[SystemModel] = None
    graph: Optional[ConeModel] = None
    options: Optional[OptionsModel] = None

    @model_validator(mode="after")
    def _validate_choice(self):
        if (self.system is None) == (self.graph is None):
            raise ValueError("exactly one of 'system' or 'graph' must be present")
        if self.graph is not None and self.n is None:
            raise ValueError("'graph' input requires the state dimension 'n'")
        if self.system is not None and self.n is not None:
            if self.n != len(self.system.A):
                raise ValueError(
                    f"n={self.n} contradicts system.A of size {len(self.system.A)}")
        return self

    def to_process(self) -> ConvexProcess:
        if self.system is not None:
            return self.system.to_process()
        cone = self.graph.to_cone(2 * self.n, where="graph")
        return ConvexProcess(self.n, cone)


# -- service payloads --------------------------------------------------------


class AssumptionModel(BaseModel):
    name: str
    satisfied: bool
    witness: dict = Field(default_factory=dict)


class VerdictModel(BaseModel):
    property: str
    result: str
    assumptions: list[AssumptionModel]
    certificate: Optional[dict] = None
    steps: dict[str, int] = Field(default_factory=dict)
    notes: str = ""


class AnalyzeRequest(BaseModel):
    input: SystemFileModel
    check: Literal["reach", "null", "all"] = "all"
    refine_depth: Optional[int] = Field(default=None, ge=0)


class AnalyzeResponse(BaseModel):
    verdicts: list[VerdictModel]


class OracleRequest(BaseModel):
    input: SystemFileModel
    direction: Literal["reach", "null", "feasible"] = "reach"
    steps: Optional[int] = Field(default=None, ge=0)


class OracleResponse(BaseModel):
    direction: str
    cones: list[ConeModel]
    saturated_at: Optional[int] = None
    steps: int


class SimulateRequest(BaseModel):
    input: SystemFileModel
    x0: list[RatScalar]
    steps: int = Field(default=10, ge=0)
    seed: int = 0

    @field_validator("x0")
    @classmethod
    def _validate_x0(cls, value):
        _check_rationals([value], "x0")
        return value


class SimulateResponse(BaseModel):
    infeasible: bool
    trajectory: Optional[list[list[float]]] = None


class DualResponse(BaseModel):
    n: int
    graph: ConeModel


class InfoResponse(BaseModel):
    n: int
    dom: ConeModel
    im: ConeModel
    strict: bool
    l_minus_graph: Matrix
    l_plus_graph: Matrix
    r_minus: Matrix
    r_plus: Matrix
    n_minus: Matrix
    steps: dict[str, int]
