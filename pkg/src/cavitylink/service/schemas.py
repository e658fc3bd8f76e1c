"""Pydantic request/response models for the simulation service."""
from __future__ import annotations

from typing import Literal, Optional

import numpy as np
from pydantic import BaseModel, Field, model_validator


class CouplingModel(BaseModel):
    kind: Literal["bridge_qubit", "evanescent", "fiber"]
    g1: float = Field(1.0, ge=0)
    g2: float = Field(1.0, ge=0)
    omega_a: float = 0.0
    lam: float = Field(1.0, ge=0)
    phi: float = Field(0.0, ge=0, lt=2 * np.pi)
    nu: float = Field(1.0, ge=0)

    def to_core_dict(self) -> dict:
        if self.kind == "bridge_qubit":
            return {"kind": self.kind, "g1": self.g1, "g2": self.g2, "omega_a": self.omega_a}
        if self.kind == "evanescent":
            return {"kind": self.kind, "lam": self.lam, "phi": self.phi}
        return {"kind": self.kind, "nu": self.nu}


class ConfigModel(BaseModel):
    coupling: CouplingModel
    omega_c1: float = 0.0
    omega_c2: float = 0.0
    J1: float = Field(0.0, ge=0)
    J2: float = Field(0.0, ge=0)
    rotating_frame: bool = True
    eta: float = Field(1.0, gt=0)
    units: Literal["eta", "MHz"] = "eta"

    def to_core_dict(self) -> dict:
        return {"coupling": self.coupling.to_core_dict(), "omega_c1": self.omega_c1,
                "omega_c2": self.omega_c2, "J1": self.J1, "J2": self.J2,
                "rotating_frame": self.rotating_frame, "eta": self.eta,
                "units": self.units}


class LossModel(BaseModel):
    kappa: float = Field(5e-2, ge=0)
    gamma: float = Field(5e-3, ge=0)


class InitialModel(BaseModel):
    theta: float = Field(np.pi / 4, ge=0, le=np.pi / 2)
    excited_cavity: Literal[1, 2] = 1
    qubit_state: Literal["g", "e"] = "g"


class TauGridModel(BaseModel):
    start: float = Field(0.0, ge=0)
    end: float = 2 * np.pi
    steps: int = Field(1001, ge=2)

    @model_validator(mode="after")
    def _increasing(self):
        if self.end <= self.start:
            raise ValueError("tau grid must be strictly increasing")
        return self


class ObservableModel(BaseModel):
    kind: Literal["concurrence", "fidelity", "population"]
    bipartition: str = ""
    target: str = ""
    site: str = ""


class SimulateRequest(BaseModel):
    config: ConfigModel
    initial: InitialModel = InitialModel()
    tau_grid: TauGridModel = TauGridModel()
    observables: list[ObservableModel]
    losses: Optional[LossModel] = None
    dtau: float = Field(1e-3, gt=0)
    analyze: bool = True
    convergence_check: bool = True

    def to_core_dict(self) -> dict:
        return {
            "config": self.config.to_core_dict(),
            "initial": self.initial.model_dump(),
            "tau_grid": self.tau_grid.model_dump(),
            "observables": [o.model_dump() for o in self.observables],
            "losses": None if self.losses is None else self.losses.model_dump(),
            "dtau": self.dtau,
            "analyze": self.analyze,
            "convergence_check": self.convergence_check,
        }


class ZeroIntervalModel(BaseModel):
    tau_start: float
    tau_end: float
    kind: str


class PlateauModel(BaseModel):
    tau_start: float
    tau_end: float
    level: float


class SimulateResponse(BaseModel):
    taus: list[float]
    series: dict[str, list[float]]
    zero_intervals: dict[str, list[ZeroIntervalModel]]
    plateaus: dict[str, list[PlateauModel]]
    manifest: dict


class SweepRequest(BaseModel):
    config: ConfigModel
    tau: float
    j_start: float = Field(0.0, ge=0)
    j_stop: float = 4.0
    j_count: int = Field(81, ge=1)
    theta_start: float = Field(0.0, ge=0)
    theta_stop: float = np.pi / 2
    theta_count: int = Field(81, ge=1)
    bipartitions: list[str] = ["a1b2", "a2b1"]


class SweepResponse(BaseModel):
    j_values: list[float]
    theta_values: list[float]
    surfaces: dict[str, list[list[float]]]
    manifest: dict


class FigureRequest(BaseModel):
    steps: Optional[int] = Field(None, ge=2)
    grid: Optional[int] = Field(None, ge=2)
    kappa: Optional[float] = Field(None, ge=0)
    gamma: Optional[float] = Field(None, ge=0)
    dtau: Optional[float] = Field(None, gt=0)


class SurfaceModel(BaseModel):
    j_values: list[float]
    theta_values: list[float]
    grid: list[list[float]]


class FigureResponse(BaseModel):
    name: str
    description: str
    traces: dict[str, dict[str, list[float]]]  # label -> {"taus": [...], "values": [...]}
    surfaces: dict[str, SurfaceModel]
    zero_intervals: dict[str, list[ZeroIntervalModel]]
    plateaus: dict[str, list[PlateauModel]]
    convergence: list[dict]
    manifest: dict


class FigureInfo(BaseModel):
    name: str
    description: str
    kind: Literal["traces", "sweep"]


class FiberEquivalenceRequest(BaseModel):
    nu: float = Field(1.0, gt=0)
    g: float = Field(1.0, gt=0)
    J: float = Field(0.0, ge=0)
    tau_end: float = Field(2 * np.pi, gt=0)
    tau_steps: int = Field(201, ge=2)


class FiberEquivalenceResponse(BaseModel):
    nu: float
    g: float
    max_deviation: float
    per_state: dict[str, float]
    tolerance: float
    passed: bool


class OracleAuditResponse(BaseModel):
    findings: dict[str, bool]
    max_deviation: dict[str, float]
    matches_documented_findings: bool
    grid_points: int
