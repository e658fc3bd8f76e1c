"""Physical parameter sets and Hamiltonian builders for the coupling schemes.

All rates are expressed in units of the reference inter-cavity coupling eta
(g for the bridge qubit, lambda for evanescent fields, nu for the fiber),
and time is the normalized tau = eta * t.  Config files may instead give
rates as linear frequencies in MHz (``"units": "MHz"``); they are divided
by the coupling strength on load.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .hilbert import (
    LayoutError,
    SystemLayout,
    annihilation,
    embed_operator,
    sigma_minus,
)


class ConfigError(ValueError):
    """Invalid physical configuration."""


@dataclass(frozen=True)
class BridgeQubit:
    """Two-level mediator coupled to all four modes (rates g1, g2)."""

    g1: float = 1.0
    g2: float = 1.0
    omega_a: float = 0.0

    def __post_init__(self):
        if self.g1 < 0 or self.g2 < 0:
            raise ConfigError("qubit coupling strengths must be >= 0")

    @property
    def strength(self) -> float:
        return self.g1


@dataclass(frozen=True)
class Evanescent:
    """Direct photon hopping a1<->b2 and b1<->a2 at rate lam with phase phi."""

    lam: float = 1.0
    phi: float = 0.0

    def __post_init__(self):
        if self.lam < 0:
            raise ConfigError("evanescent coupling strength must be >= 0")
        if not 0.0 <= self.phi < 2 * np.pi:
            raise ConfigError("phi must lie in [0, 2*pi)")

    @property
    def strength(self) -> float:
        return self.lam


@dataclass(frozen=True)
class Fiber:
    """Short-fiber limit: all four modes couple to one fiber mode c at rate nu."""

    nu: float = 1.0

    def __post_init__(self):
        if self.nu < 0:
            raise ConfigError("fiber coupling strength must be >= 0")

    @property
    def strength(self) -> float:
        return self.nu


Coupling = Union[BridgeQubit, Evanescent, Fiber]


@dataclass(frozen=True)
class SystemConfig:
    """All physical parameters of the two-cavity system, in units of eta."""

    coupling: Coupling
    omega_c1: float = 0.0
    omega_c2: float = 0.0
    J1: float = 0.0
    J2: float = 0.0
    rotating_frame: bool = True
    eta: float = 1.0

    def __post_init__(self):
        if self.J1 < 0 or self.J2 < 0:
            raise ConfigError("intra-cavity couplings J1, J2 must be >= 0")
        if self.eta <= 0:
            raise ConfigError("eta must be > 0")

    def layout(self, cutoff: int = 1) -> SystemLayout:
        if isinstance(self.coupling, BridgeQubit):
            return SystemLayout.with_qubit(cutoff)
        if isinstance(self.coupling, Fiber):
            return SystemLayout.with_fiber(cutoff)
        return SystemLayout.modes(cutoff)


def _mode_ops(layout: SystemLayout):
    """Lowering operators of the four WGMs, embedded in the full space."""
    ops = {}
    for lbl in ("a1", "b1", "a2", "b2"):
        i = layout.index(lbl)
        ops[lbl] = embed_operator(layout, i, annihilation(layout.subsystems[i].dim))
    return ops


def build_intracavity_hamiltonian(config: SystemConfig, layout: SystemLayout) -> np.ndarray:
    """Free mode evolution plus backscattering couplings J1, J2."""
    ops = _mode_ops(layout)
    a1, b1, a2, b2 = ops["a1"], ops["b1"], ops["a2"], ops["b2"]
    dag = lambda m: m.conj().T
    h = config.J1 * (dag(a1) @ b1 + dag(b1) @ a1)
    h = h + config.J2 * (dag(a2) @ b2 + dag(b2) @ a2)
    if not config.rotating_frame:
        h = h + config.omega_c1 * (dag(a1) @ a1 + dag(b1) @ b1)
        h = h + config.omega_c2 * (dag(a2) @ a2 + dag(b2) @ b2)
    return h


def build_coupling_hamiltonian(config: SystemConfig, layout: SystemLayout) -> np.ndarray:
    """Inter-cavity interaction term for the configured coupling kind."""
    ops = _mode_ops(layout)
    a1, b1, a2, b2 = ops["a1"], ops["b1"], ops["a2"], ops["b2"]
    dag = lambda m: m.conj().T
    c = config.coupling
    if isinstance(c, BridgeQubit):
        try:
            q = layout.index("q")
        except LayoutError:
            raise LayoutError("bridge-qubit coupling requires a qubit in the layout")
        sm = embed_operator(layout, q, sigma_minus())
        sp = sm.conj().T
        h = np.zeros_like(sm)
        if not config.rotating_frame:
            h = h + c.omega_a * (sp @ sm)
        for m, g in ((a1, c.g1), (b1, c.g1), (a2, c.g2), (b2, c.g2)):
            h = h + g * (dag(m) @ sm + m @ sp)
        return h
    if isinstance(c, Fiber):
        try:
            fc = layout.index("c")
        except LayoutError:
            raise LayoutError("fiber coupling requires the fiber mode c in the layout")
        cm = embed_operator(layout, fc, annihilation(layout.subsystems[fc].dim))
        collective = a1 + b1 + a2 + b2
        return c.nu * (dag(collective) @ cm + collective @ cm.conj().T)
    # evanescent: a1 <-> b2 and b1 <-> a2 hops with phase phi
    ph = np.exp(-1j * c.phi)
    h = c.lam * (ph * (dag(a1) @ b2) + ph * (dag(b1) @ a2))
    return h + h.conj().T


def total_hamiltonian(config: SystemConfig, layout: SystemLayout | None = None) -> np.ndarray:
    if layout is None:
        layout = config.layout()
    return build_intracavity_hamiltonian(config, layout) + build_coupling_hamiltonian(config, layout)


_COUPLING_KINDS = {"bridge_qubit": BridgeQubit, "evanescent": Evanescent, "fiber": Fiber}


def config_from_dict(raw: dict) -> SystemConfig:
    """Build a SystemConfig from the documented JSON schema.

    Rates are in units of eta by default; with ``"units": "MHz"`` every rate
    is a linear frequency in MHz and is normalized by the coupling strength.
    """
    data = dict(raw)
    units = data.pop("units", "eta")
    if units not in ("eta", "MHz"):
        raise ConfigError(f"unknown units {units!r}, expected 'eta' or 'MHz'")
    cdata = dict(data.pop("coupling", None) or {})
    kind = cdata.pop("kind", None)
    if kind not in _COUPLING_KINDS:
        raise ConfigError(f"coupling.kind must be one of {sorted(_COUPLING_KINDS)}, got {kind!r}")
    known = {"omega_c1", "omega_c2", "J1", "J2", "rotating_frame", "eta"}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"unknown config fields: {sorted(unknown)}")
    try:
        coupling = _COUPLING_KINDS[kind](**cdata)
    except TypeError as exc:
        raise ConfigError(f"bad coupling parameters: {exc}") from exc
    scale = 1.0
    eta = float(data.pop("eta", 1.0))
    if units == "MHz":
        eta = coupling.strength
        if eta <= 0:
            raise ConfigError("MHz config requires a positive coupling strength")
        scale = 1.0 / eta
        if isinstance(coupling, BridgeQubit):
            coupling = BridgeQubit(coupling.g1 * scale, coupling.g2 * scale,
                                   coupling.omega_a * scale)
        elif isinstance(coupling, Evanescent):
            coupling = Evanescent(coupling.lam * scale, coupling.phi)
        else:
            coupling = Fiber(coupling.nu * scale)
    rates = {k: float(data.get(k, 0.0)) * scale for k in ("omega_c1", "omega_c2", "J1", "J2")}
    return SystemConfig(coupling=coupling,
                        rotating_frame=bool(data.get("rotating_frame", True)),
                        eta=eta,
                        **rates)


def config_to_dict(config: SystemConfig) -> dict:
    c = config.coupling
    if isinstance(c, BridgeQubit):
        cd = {"kind": "bridge_qubit", "g1": c.g1, "g2": c.g2, "omega_a": c.omega_a}
    elif isinstance(c, Evanescent):
        cd = {"kind": "evanescent", "lam": c.lam, "phi": c.phi}
    else:
        cd = {"kind": "fiber", "nu": c.nu}
    return {
        "coupling": cd,
        "omega_c1": config.omega_c1,
        "omega_c2": config.omega_c2,
        "J1": config.J1,
        "J2": config.J2,
        "rotating_frame": config.rotating_frame,
        "eta": config.eta,
        "units": "eta",
    }


def experimental_qubit_config(J_over_g: float = 0.0) -> SystemConfig:
    """Typical microtoroid numbers: g/2pi = 70 MHz, J up to 2pi x 250 MHz."""
    return config_from_dict({
        "units": "MHz",
        "coupling": {"kind": "bridge_qubit", "g1": 70.0, "g2": 70.0},
        "J1": 70.0 * J_over_g,
        "J2": 70.0 * J_over_g,
    })


def experimental_evanescent_config(J_over_lam: float = 0.0) -> SystemConfig:
    """Typical microtoroid numbers: lambda/2pi = 30 MHz."""
    return config_from_dict({
        "units": "MHz",
        "coupling": {"kind": "evanescent", "lam": 30.0},
        "J1": 30.0 * J_over_lam,
        "J2": 30.0 * J_over_lam,
    })
