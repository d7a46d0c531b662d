"""HTTP face of the library: a small JSON API over the handlers."""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import XqcorrError
from . import handlers, schemas


def create_app() -> FastAPI:
    app = FastAPI(title="xqcorr", version=__version__,
                  description="One-way deficit, concurrence, and phase-flip dynamics "
                              "of two-qubit X states.")

    @app.exception_handler(XqcorrError)
    async def domain_error(request: Request, exc: XqcorrError) -> JSONResponse:
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/deficit", response_model=schemas.DeficitResponse,
              response_model_exclude_none=True)
    def deficit(req: schemas.DeficitRequest) -> schemas.DeficitResponse:
        return handlers.compute_deficit(req)

    @app.post("/concurrence", response_model=schemas.ConcurrenceResponse)
    def concurrence(req: schemas.ConcurrenceRequest) -> schemas.ConcurrenceResponse:
        return handlers.compute_concurrence(req)

    @app.post("/sweep", response_model=schemas.SweepResponse,
              response_model_exclude_none=True)
    def sweep(req: schemas.SweepRequest) -> schemas.SweepResponse:
        return handlers.run_sweep(req)

    @app.post("/sudden-death", response_model=schemas.SuddenDeathResponse)
    def sudden_death(req: schemas.SuddenDeathRequest) -> schemas.SuddenDeathResponse:
        return handlers.compute_sudden_death(req)

    @app.post("/verify", response_model=schemas.VerifyResponse)
    def verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
        return handlers.run_verify(req)

    return app
