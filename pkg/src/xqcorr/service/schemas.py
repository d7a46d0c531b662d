"""Request and response bodies shared by the HTTP service and the CLI."""
from __future__ import annotations

from pydantic import BaseModel, Field

from ..xstate import XStateParams


class StateParams(BaseModel):
    """The five X-state parameters; range-checked here, physicality-checked in core."""

    r: float = Field(ge=-1.0, le=1.0)
    s: float = Field(ge=-1.0, le=1.0)
    c1: float = Field(ge=-1.0, le=1.0)
    c2: float = Field(ge=-1.0, le=1.0)
    c3: float = Field(ge=-1.0, le=1.0)

    def to_params(self) -> XStateParams:
        return XStateParams(self.r, self.s, self.c1, self.c2, self.c3)


class MeasurementDirection(BaseModel):
    z1: float
    z2: float
    z3: float


class DeficitRequest(BaseModel):
    params: StateParams
    with_oracle: bool = False
    oracle_grid: int = Field(default=256, ge=64)


class DeficitPayload(BaseModel):
    value: float
    min_entropy: float
    state_entropy: float
    method: str
    argmin_phi: float | None = None
    argmin_z: MeasurementDirection | None = None


class DeficitResponse(BaseModel):
    closed: DeficitPayload
    oracle: DeficitPayload | None = None
    gap: float | None = None


class ConcurrenceRequest(BaseModel):
    params: StateParams


class ConcurrenceResponse(BaseModel):
    value: float
    sqrt_lambdas: list[float]


class SweepRequest(BaseModel):
    params: StateParams
    steps: int = Field(default=101, ge=2)
    with_oracle: bool = False
    oracle_grid: int = Field(default=256, ge=64)


class SweepRecordModel(BaseModel):
    p: float
    deficit: float
    concurrence: float
    oracle_deficit: float | None = None


class SweepResponse(BaseModel):
    params: StateParams
    records: list[SweepRecordModel]


class SuddenDeathRequest(BaseModel):
    params: StateParams
    tol: float = Field(default=1e-6, gt=0.0)


class SuddenDeathResponse(BaseModel):
    p_star: float | None = None


class VerifyRequest(BaseModel):
    states: int = Field(default=200, ge=1, le=100000)
    seed: int = 0


class VerifyCheckModel(BaseModel):
    name: str
    max_deviation: float
    tolerance: float
    passed: bool


class VerifyResponse(BaseModel):
    ok: bool
    seed: int
    states: int
    checks: list[VerifyCheckModel]
