"""One handler per endpoint, over the core library.

The HTTP app and the CLI both call these, so a command-line run and a
service call with the same inputs produce identical numbers.
"""
from __future__ import annotations

from .. import deficit as deficit_mod
from .. import dynamics, entanglement, verify
from . import schemas


def _deficit_payload(result: deficit_mod.DeficitResult) -> schemas.DeficitPayload:
    argmin_z = None
    if result.argmin_z is not None:
        argmin_z = schemas.MeasurementDirection(z1=result.argmin_z.z1, z2=result.argmin_z.z2,
                                                z3=result.argmin_z.z3)
    return schemas.DeficitPayload(
        value=result.value,
        min_entropy=result.min_entropy,
        state_entropy=result.state_entropy,
        method=result.method.value,
        argmin_phi=result.argmin_phi,
        argmin_z=argmin_z,
    )


def compute_deficit(req: schemas.DeficitRequest) -> schemas.DeficitResponse:
    params = req.params.to_params()
    closed = deficit_mod.deficit_closed(params)
    if not req.with_oracle:
        return schemas.DeficitResponse(closed=_deficit_payload(closed))
    oracle = deficit_mod.deficit_oracle(params, coarse_grid=req.oracle_grid)
    return schemas.DeficitResponse(closed=_deficit_payload(closed),
                                   oracle=_deficit_payload(oracle),
                                   gap=oracle.value - closed.value)


def compute_concurrence(req: schemas.ConcurrenceRequest) -> schemas.ConcurrenceResponse:
    breakdown = entanglement.concurrence_closed(req.params.to_params())
    return schemas.ConcurrenceResponse(value=breakdown.value,
                                       sqrt_lambdas=list(breakdown.sqrt_lambdas))


def run_sweep(req: schemas.SweepRequest) -> schemas.SweepResponse:
    records = dynamics.sweep(req.params.to_params(), p_steps=req.steps,
                             with_oracle=req.with_oracle, oracle_grid=req.oracle_grid)
    return schemas.SweepResponse(
        params=req.params,
        records=[schemas.SweepRecordModel(p=r.p, deficit=r.deficit, concurrence=r.concurrence,
                                          oracle_deficit=r.oracle_deficit) for r in records],
    )


def compute_sudden_death(req: schemas.SuddenDeathRequest) -> schemas.SuddenDeathResponse:
    p_star = dynamics.find_sudden_death(req.params.to_params(), tol=req.tol)
    return schemas.SuddenDeathResponse(p_star=p_star)


def run_verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
    report = verify.run_verification(seed=req.seed, states=req.states)
    return schemas.VerifyResponse(
        ok=report.ok,
        seed=report.seed,
        states=report.states,
        checks=[schemas.VerifyCheckModel(name=c.name, max_deviation=c.max_deviation,
                                         tolerance=c.tolerance, passed=c.passed)
                for c in report.checks],
    )
