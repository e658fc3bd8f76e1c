"""FastAPI service exposing the simulation library.

Error mapping: invalid physics/spec parameters -> 422, numerical-tolerance
failures (integrator drift) -> 409.  The CLI translates these to exit
codes 2 and 3.
"""
from __future__ import annotations

import numpy as np
from fastapi import FastAPI, HTTPException

from .. import __version__
from ..entanglement import ConcurrenceError
from ..experiments import (
    DOCUMENTED_AUDIT_FINDINGS,
    ExperimentSpec,
    SpecError,
    audit_analytic_oracles,
    sweep,
    run_experiment,
    verify_fiber_equivalence,
)
from ..figures import FigureOverrides, FIGURES, SweepFigure, run_figure
from ..hilbert import LayoutError, StateError
from ..models import ConfigError, config_from_dict
from ..opensystems import IntegrationError, LossConfigError
from . import schemas as sm

INVALID = (SpecError, ConfigError, LayoutError, StateError, ConcurrenceError,
           LossConfigError, ValueError)

app = FastAPI(title="cavitylink", version=__version__,
              description="Entanglement generation and transfer between two "
                          "coupled microtoroidal cavities")


def _guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except IntegrationError as exc:
        raise HTTPException(status_code=409, detail=str(exc))
    except INVALID as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/simulate", response_model=sm.SimulateResponse)
def simulate(req: sm.SimulateRequest) -> sm.SimulateResponse:
    spec = _guard(ExperimentSpec.from_dict, req.to_core_dict())
    res = _guard(run_experiment, spec)
    return sm.SimulateResponse(
        taus=res.taus.tolist(),
        series={k: v.tolist() for k, v in res.series.items()},
        zero_intervals={k: [sm.ZeroIntervalModel(tau_start=z.tau_start, tau_end=z.tau_end,
                                                 kind=z.kind) for z in v]
                        for k, v in res.zero_intervals.items()},
        plateaus={k: [sm.PlateauModel(tau_start=p.tau_start, tau_end=p.tau_end,
                                      level=p.level) for p in v]
                  for k, v in res.plateaus.items()},
        manifest=res.manifest,
    )


@app.post("/sweep", response_model=sm.SweepResponse)
def run_sweep(req: sm.SweepRequest) -> sm.SweepResponse:
    config = _guard(config_from_dict, req.config.to_core_dict())
    js = np.linspace(req.j_start, req.j_stop, req.j_count)
    thetas = np.linspace(req.theta_start, req.theta_stop, req.theta_count)
    res = _guard(sweep, config, req.tau, js, thetas, tuple(req.bipartitions))
    return sm.SweepResponse(
        j_values=res.j_values.tolist(),
        theta_values=res.theta_values.tolist(),
        surfaces={k: v.tolist() for k, v in res.surfaces.items()},
        manifest=res.manifest,
    )


@app.get("/figures", response_model=list[sm.FigureInfo])
def list_figures() -> list[sm.FigureInfo]:
    return [sm.FigureInfo(name=name, description=fig.description,
                          kind="sweep" if isinstance(fig, SweepFigure) else "traces")
            for name, fig in sorted(FIGURES.items())]


@app.post("/figures/{name}", response_model=sm.FigureResponse)
def figure(name: str, req: sm.FigureRequest) -> sm.FigureResponse:
    if name not in FIGURES:
        raise HTTPException(status_code=404, detail=f"unknown figure {name!r}")
    ov = FigureOverrides(steps=req.steps, grid=req.grid, kappa=req.kappa,
                         gamma=req.gamma, dtau=req.dtau)
    res = _guard(run_figure, name, ov)
    return sm.FigureResponse(
        name=res.name,
        description=res.description,
        traces={k: {"taus": t.tolist(), "values": v.tolist()}
                for k, (t, v) in res.traces.items()},
        surfaces={k: sm.SurfaceModel(j_values=s["j_values"].tolist(),
                                     theta_values=s["theta_values"].tolist(),
                                     grid=s["grid"].tolist())
                  for k, s in res.surfaces.items()},
        zero_intervals={k: [sm.ZeroIntervalModel(tau_start=z.tau_start, tau_end=z.tau_end,
                                                 kind=z.kind) for z in v]
                        for k, v in res.zero_intervals.items()},
        plateaus={k: [sm.PlateauModel(tau_start=p.tau_start, tau_end=p.tau_end,
                                      level=p.level) for p in v]
                  for k, v in res.plateaus.items()},
        convergence=res.convergence,
        manifest=res.manifest,
    )


@app.post("/verify/fiber-equivalence", response_model=sm.FiberEquivalenceResponse)
def fiber_equivalence(req: sm.FiberEquivalenceRequest) -> sm.FiberEquivalenceResponse:
    taus = np.linspace(0.0, req.tau_end, req.tau_steps)
    rep = _guard(verify_fiber_equivalence, nu=req.nu, g=req.g, taus=taus, J=req.J)
    return sm.FiberEquivalenceResponse(
        nu=rep.nu, g=rep.g, max_deviation=rep.max_deviation,
        per_state=rep.per_state, tolerance=rep.tolerance, passed=rep.passed)


@app.post("/verify/analytic-oracles", response_model=sm.OracleAuditResponse)
def analytic_oracles() -> sm.OracleAuditResponse:
    rep = _guard(audit_analytic_oracles)
    return sm.OracleAuditResponse(
        findings=rep.findings,
        max_deviation=rep.max_deviation,
        matches_documented_findings=rep.findings == DOCUMENTED_AUDIT_FINDINGS,
        grid_points=len(rep.grid),
    )
