"""FastAPI application wrapping the report pipeline.

Invalid input maps to HTTP 422; an inconsistent or inconclusive result is
still a 200 whose body carries the status field, since it is a finding,
not a transport failure.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__, numeric, report
from . import schemas

app = FastAPI(
    title="mixedsing",
    version=__version__,
    description=(
        "Invariants of two-variable mixed polynomial singularities: link "
        "data, round-handle ledgers, monodromy characteristic polynomials, "
        "and numeric fold-orbit verification."
    ),
)


def _guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except report.InputError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.get("/health", response_model=schemas.HealthResponse)
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/analyze", response_model=schemas.AnalyzeResponse)
def analyze(req: schemas.AnalyzeRequest) -> dict:
    return _guard(
        report.analyze,
        req.f,
        req.g,
        t=req.t,
        gamma=req.gamma,
        gamma1=req.gamma1,
        gamma2=req.gamma2,
        seed=req.seed,
        with_folds=req.with_folds,
        fold_seeds=req.fold_seeds,
    )


@app.post("/monodromy", response_model=schemas.MonodromyResponse)
def monodromy(req: schemas.CountsOrPairRequest) -> dict:
    p, q, m, n = _guard(report.resolve_counts, req.f, req.g, req.p, req.q, req.m, req.n)
    return _guard(report.monodromy_report, p, q, m, n)


@app.post("/handles", response_model=schemas.HandlesResponse)
def handles(req: schemas.CountsOrPairRequest) -> dict:
    p, q, m, n = _guard(report.resolve_counts, req.f, req.g, req.p, req.q, req.m, req.n)
    return _guard(report.handles_report, p, q, m, n)


@app.post("/deform", response_model=schemas.DeformResponse)
def deform(req: schemas.DeformRequest) -> dict:
    return _guard(
        report.deform_report,
        req.f,
        req.g,
        t=req.t,
        gamma=req.gamma,
        gamma1=req.gamma1,
        gamma2=req.gamma2,
        probe_samples=req.probe_samples,
        seed=req.seed,
    )


@app.post("/verify", response_model=schemas.VerifyResponse)
def verify(req: schemas.VerifyRequest) -> dict:
    return _guard(
        report.verify_report,
        grid_max_m=req.grid_max_m,
        grid_max_p=req.grid_max_p,
        example1_m=req.example1_m,
        instances=req.instances,
        folds=req.folds,
        f_text=req.f,
        g_text=req.g,
        t=req.t,
        gamma=req.gamma,
        gamma1=req.gamma1,
        gamma2=req.gamma2,
        fold_seeds=req.fold_seeds,
        seed=req.seed,
        tol=req.tol,
    )


@app.post("/verify-folds", response_model=schemas.FoldsResponse)
def verify_folds(req: schemas.FoldsRequest) -> dict:
    cfg = numeric.NumericConfig(
        epsilon=req.epsilon,
        seeds=req.seeds,
        accept_tol=req.accept_tol,
        cluster_tol=req.cluster_tol,
    )
    return _guard(
        report.folds_report,
        req.f,
        req.g,
        t=req.t,
        gamma=req.gamma,
        gamma1=req.gamma1,
        gamma2=req.gamma2,
        seeds=req.seeds,
        seed=req.seed,
        cfg=cfg,
    )
