"""GKSL master-equation dynamics with photon loss and qubit spontaneous emission.

The dissipator follows the published factor-2 convention,

    D[L] rho = rate * (2 L rho L^dag - L^dag L rho - rho L^dag L),

so a mode damped at kappa loses excitation as d<n>/dtau = -2 kappa <n>.
In the more common D[sqrt(2 kappa) L] normalization the same dynamics
corresponds to a jump operator sqrt(2 kappa) a.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .hilbert import SystemLayout, annihilation, embed_operator, sigma_minus
from .models import BridgeQubit, SystemConfig, total_hamiltonian

DEFAULT_KAPPA = 5e-2
DEFAULT_GAMMA = 5e-3
DEFAULT_DTAU = 1e-3

TRACE_DRIFT_TOL = 1e-8
EIG_DRIFT_TOL = -1e-6


class IntegrationError(RuntimeError):
    """Trace or positivity drift beyond tolerance (dtau too large)."""


class LossConfigError(ValueError):
    pass


@dataclass(frozen=True)
class LossConfig:
    """Mode decay rate kappa and qubit spontaneous-emission rate gamma (units of eta)."""

    kappa: float = DEFAULT_KAPPA
    gamma: float = DEFAULT_GAMMA

    def __post_init__(self):
        if self.kappa < 0 or self.gamma < 0:
            raise LossConfigError("loss rates must be >= 0")


@dataclass(frozen=True)
class LindbladGenerator:
    """Hamiltonian plus a list of (rate, jump operator) dissipators."""

    hamiltonian: np.ndarray
    jump_ops: tuple[tuple[float, np.ndarray], ...]

    @classmethod
    def build(cls, config: SystemConfig, losses: LossConfig,
              layout: SystemLayout | None = None) -> "LindbladGenerator":
        if layout is None:
            layout = config.layout()
        has_qubit = isinstance(config.coupling, BridgeQubit)
        if losses.gamma != 0 and not has_qubit:
            raise LossConfigError("gamma must be 0 for couplings without a qubit")
        h = total_hamiltonian(config, layout)
        jumps = []
        for lbl in ("a1", "b1", "a2", "b2"):
            i = layout.index(lbl)
            jumps.append((losses.kappa,
                          embed_operator(layout, i, annihilation(layout.subsystems[i].dim))))
        if has_qubit and losses.gamma > 0:
            q = layout.index("q")
            jumps.append((losses.gamma, embed_operator(layout, q, sigma_minus())))
        return cls(h, tuple(jumps))


def lindblad_rhs(generator: LindbladGenerator, rho: np.ndarray) -> np.ndarray:
    """-i[H, rho] + sum_k rate_k (2 L rho L^dag - L^dag L rho - rho L^dag L)."""
    h = generator.hamiltonian
    if rho.shape != h.shape:
        raise LossConfigError(f"rho shape {rho.shape} does not match generator {h.shape}")
    out = -1j * (h @ rho - rho @ h)
    for rate, L in generator.jump_ops:
        if rate == 0:
            continue
        Ld = L.conj().T
        LdL = Ld @ L
        out = out + rate * (2.0 * (L @ rho @ Ld) - LdL @ rho - rho @ LdL)
    return out


def _rk4_step(generator: LindbladGenerator, rho: np.ndarray, dtau: float) -> np.ndarray:
    k1 = lindblad_rhs(generator, rho)
    k2 = lindblad_rhs(generator, rho + 0.5 * dtau * k1)
    k3 = lindblad_rhs(generator, rho + 0.5 * dtau * k2)
    k4 = lindblad_rhs(generator, rho + dtau * k3)
    return rho + (dtau / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _check_state(rho: np.ndarray, tau: float) -> None:
    tr = np.trace(rho).real
    if abs(tr - 1.0) > TRACE_DRIFT_TOL:
        raise IntegrationError(f"trace drift {tr - 1.0:.3e} at tau={tau:.6f}; reduce dtau")
    if np.max(np.abs(rho - rho.conj().T)) > 1e-9:
        raise IntegrationError(f"hermiticity drift at tau={tau:.6f}; reduce dtau")
    min_eig = float(np.linalg.eigvalsh(rho)[0])
    if min_eig < EIG_DRIFT_TOL:
        raise IntegrationError(f"negative eigenvalue {min_eig:.3e} at tau={tau:.6f}; reduce dtau")


def integrate(generator: LindbladGenerator, rho0: np.ndarray, tau_end: float,
              dtau: float = DEFAULT_DTAU, sample_taus=None,
              check_every: int = 200) -> tuple[np.ndarray, list[np.ndarray]]:
    """Fixed-step RK4 on the matrix ODE, sampling rho at the requested taus.

    Samples land on the nearest grid step below, then a fractional RK4 step
    closes the gap, so sample times are exact.  Validity (trace, hermiticity,
    positivity) is checked at every sample and every ``check_every`` steps.
    """
    if dtau <= 0:
        raise LossConfigError("dtau must be > 0")
    if sample_taus is None:
        sample_taus = np.array([tau_end])
    sample_taus = np.asarray(sample_taus, dtype=float)
    if np.any(sample_taus < 0) or np.any(np.diff(sample_taus) <= 0):
        raise LossConfigError("sample taus must be nonnegative and strictly increasing")
    if sample_taus[-1] > tau_end + 1e-12:
        raise LossConfigError("sample taus exceed tau_end")

    rho = np.asarray(rho0, dtype=complex).copy()
    _check_state(rho, 0.0)
    samples: list[np.ndarray] = []
    tau = 0.0
    steps_done = 0
    for target in sample_taus:
        while tau + dtau <= target + 1e-12:
            rho = _rk4_step(generator, rho, dtau)
            tau += dtau
            steps_done += 1
            if steps_done % check_every == 0:
                _check_state(rho, tau)
        remainder = target - tau
        if remainder > 1e-12:
            rho = _rk4_step(generator, rho, remainder)
            tau = target
        _check_state(rho, tau)
        samples.append(0.5 * (rho + rho.conj().T))
    return sample_taus, samples


@dataclass
class LossyComparison:
    """Concurrence traces for both couplings on a shared tau grid, with maxima."""

    taus: np.ndarray
    qubit_values: np.ndarray
    evanescent_values: np.ndarray
    qubit_max: float = 0.0
    qubit_argmax: float = 0.0
    evanescent_max: float = 0.0
    evanescent_argmax: float = 0.0

    def __post_init__(self):
        iq = int(np.argmax(self.qubit_values))
        ie = int(np.argmax(self.evanescent_values))
        self.qubit_max = float(self.qubit_values[iq])
        self.qubit_argmax = float(self.taus[iq])
        self.evanescent_max = float(self.evanescent_values[ie])
        self.evanescent_argmax = float(self.taus[ie])
