"""One command per published plot: parameter presets for every figure.

Each figure maps to trace runs and/or sweeps with the plot's parameters as
defaults; callers may override resolution, J, theta, or loss rates.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .entanglement import Plateau, ZeroInterval
from .experiments import (
    ExperimentSpec,
    InitialStateSpec,
    Observable,
    SpecError,
    TauGrid,
    run_experiment,
    spec_hash,
    sweep,
)
from .models import BridgeQubit, Evanescent, SystemConfig
from .opensystems import DEFAULT_GAMMA, DEFAULT_KAPPA, LossConfig

PI = float(np.pi)


@dataclass
class FigureResult:
    name: str
    description: str
    # trace outputs: label -> (taus, values); surface outputs: label -> dict
    traces: dict[str, tuple[np.ndarray, np.ndarray]] = field(default_factory=dict)
    surfaces: dict[str, dict] = field(default_factory=dict)
    zero_intervals: dict[str, list[ZeroInterval]] = field(default_factory=dict)
    plateaus: dict[str, list[Plateau]] = field(default_factory=dict)
    manifest: dict = field(default_factory=dict)
    convergence: list[dict] = field(default_factory=list)


@dataclass(frozen=True)
class FigureOverrides:
    steps: int | None = None
    grid: int | None = None
    kappa: float | None = None
    gamma: float | None = None
    dtau: float | None = None


def _cfg(kind: str, J: float) -> SystemConfig:
    coupling = BridgeQubit() if kind == "qubit" else Evanescent()
    return SystemConfig(coupling=coupling, J1=J, J2=J)


def _loss(ov: FigureOverrides, with_qubit: bool) -> LossConfig:
    kappa = DEFAULT_KAPPA if ov.kappa is None else ov.kappa
    gamma = (DEFAULT_GAMMA if ov.gamma is None else ov.gamma) if with_qubit else 0.0
    return LossConfig(kappa=kappa, gamma=gamma)


@dataclass(frozen=True)
class TraceFigure:
    description: str
    couplings: tuple[str, ...]          # "qubit" and/or "evanescent"
    J: float
    theta: float
    tau_end: float
    bipartitions: tuple[str, ...]
    lossy: bool = False
    default_steps: int = 1001

    def run(self, name: str, ov: FigureOverrides) -> FigureResult:
        steps = ov.steps or self.default_steps
        result = FigureResult(name=name, description=self.description)
        requests = []
        for kind in self.couplings:
            spec = ExperimentSpec(
                config=_cfg(kind, self.J),
                initial=InitialStateSpec(theta=self.theta),
                tau_grid=TauGrid(0.0, self.tau_end, steps),
                observables=tuple(Observable("concurrence", bipartition=bp)
                                  for bp in self.bipartitions),
                losses=_loss(ov, kind == "qubit") if self.lossy else None,
                dtau=ov.dtau or 1e-3,
            )
            res = run_experiment(spec)
            for bp in self.bipartitions:
                key = f"{kind}_C_{bp}"
                result.traces[key] = (res.taus, res.series[f"C_{bp}"])
                if f"C_{bp}" in res.zero_intervals:
                    result.zero_intervals[key] = res.zero_intervals[f"C_{bp}"]
                    result.plateaus[key] = res.plateaus[f"C_{bp}"]
            if res.manifest["convergence"].get("checked"):
                result.convergence.append({"coupling": kind, **res.manifest["convergence"]})
            requests.append(spec.to_dict())
        result.manifest = {"schema": "cavitylink-run/1", "kind": "figure",
                           "request": {"figure": name, "overrides": _ov_dict(ov)},
                           "runs": requests,
                           "config_hash": spec_hash({"figure": name, "runs": requests})}
        return result


@dataclass(frozen=True)
class SweepFigure:
    description: str
    coupling: str
    tau: float
    j_max: float
    bipartitions: tuple[str, ...]
    default_grid: int = 81

    def run(self, name: str, ov: FigureOverrides) -> FigureResult:
        n = ov.grid or self.default_grid
        js = np.linspace(0.0, self.j_max, n)
        thetas = np.linspace(0.0, PI / 2, n)
        res = sweep(_cfg(self.coupling, 0.0), self.tau, js, thetas, self.bipartitions)
        result = FigureResult(name=name, description=self.description)
        for bp in self.bipartitions:
            result.surfaces[f"{self.coupling}_C_{bp}"] = {
                "j_values": js, "theta_values": thetas,
                "grid": res.surfaces[bp]}
        req = {"figure": name, "overrides": _ov_dict(ov)}
        result.manifest = {"schema": "cavitylink-run/1", "kind": "figure",
                           "request": req, "runs": [res.manifest["request"]],
                           "config_hash": spec_hash({"figure": name,
                                                     "runs": [res.manifest["request"]]})}
        return result


def _ov_dict(ov: FigureOverrides) -> dict:
    return {k: v for k, v in (("steps", ov.steps), ("grid", ov.grid),
                              ("kappa", ov.kappa), ("gamma", ov.gamma),
                              ("dtau", ov.dtau)) if v is not None}


FIGURES: dict[str, TraceFigure | SweepFigure] = {
    "fig2a": TraceFigure("Entanglement transfer, uncoupled intra-cavity modes (J=0)",
                         ("qubit", "evanescent"), 0.0, PI / 4, PI, ("a1b1", "a2b2")),
    "fig2b": TraceFigure("Entanglement transfer with intra-cavity coupling J=2*eta",
                         ("qubit", "evanescent"), 2.0, PI / 4, PI, ("a1b1", "a2b2")),
    "fig3": TraceFigure("Sudden death/rebirth, bridge qubit, Bell input, J=0",
                        ("qubit",), 0.0, PI / 4, 2 * PI, ("a1b1", "a2b2")),
    "fig4a": SweepFigure("Intra-cavity concurrence vs (J, theta) at tau=pi/2, qubit",
                         "qubit", PI / 2, 4.0, ("a1b1", "a2b2")),
    "fig4b": SweepFigure("Inter-cavity concurrence vs (J, theta) at tau=pi/2, qubit",
                         "qubit", PI / 2, 4.0, ("a1b2", "a2b1")),
    "fig5": TraceFigure("Entanglement freezing, bridge qubit, product input, J=0",
                        ("qubit",), 0.0, 0.0, 2 * PI, ("a1b1", "a2b2")),
    "fig6a": SweepFigure("C(a1,b2) vs (J, theta) at tau=pi/4, evanescent",
                         "evanescent", PI / 4, 4.0, ("a1b2",)),
    "fig6b": SweepFigure("C(a2,b1) vs (J, theta) at tau=pi/4, evanescent",
                         "evanescent", PI / 4, 4.0, ("a2b1",)),
    "fig10a": TraceFigure("Inter-cavity pair a1/b2 vs tau, J=0, both couplings",
                          ("qubit", "evanescent"), 0.0, PI / 4, 2 * PI, ("a1b2",)),
    "fig10b": TraceFigure("Inter-cavity pair a2/b1 vs tau, J=2*eta, both couplings",
                          ("qubit", "evanescent"), 2.0, PI / 4, 2 * PI, ("a2b1",)),
    "fig11a": TraceFigure("Co-propagating pair a1/a2 vs tau, J=0, both couplings",
                          ("qubit", "evanescent"), 0.0, PI / 4, 2 * PI, ("a1a2",)),
    "fig11b": TraceFigure("Co-propagating pair b1/b2 vs tau, J=2*eta, both couplings",
                          ("qubit", "evanescent"), 2.0, PI / 4, 2 * PI, ("b1b2",)),
    "fig12a": TraceFigure("Lossy transfer, J=0, kappa=5e-2, gamma=5e-3",
                          ("qubit", "evanescent"), 0.0, PI / 4, PI, ("a1b1", "a2b2"),
                          lossy=True, default_steps=315),
    "fig12b": TraceFigure("Lossy transfer, J=2*eta",
                          ("qubit", "evanescent"), 2.0, PI / 4, PI, ("a1b1", "a2b2"),
                          lossy=True, default_steps=315),
    "fig13": TraceFigure("Lossy sudden death, bridge qubit, Bell input",
                         ("qubit",), 0.0, PI / 4, 2 * PI, ("a1b1", "a2b2"),
                         lossy=True, default_steps=629),
    "fig14": TraceFigure("Lossy freezing and revivals, bridge qubit, product input",
                         ("qubit",), 0.0, 0.0, 2 * PI, ("a1b1", "a2b2"),
                         lossy=True, default_steps=629),
}


def run_figure(name: str, overrides: FigureOverrides | None = None) -> FigureResult:
    if name not in FIGURES:
        raise SpecError(f"unknown figure {name!r}; available: {sorted(FIGURES)}")
    return FIGURES[name].run(name, overrides or FigureOverrides())
