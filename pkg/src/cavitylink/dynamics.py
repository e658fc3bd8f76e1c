"""Unitary time evolution and the published closed-form amplitude oracles.

Propagation is exact via Hermitian eigendecomposition (dimensions here never
exceed 32).  The closed-form G/W amplitude expressions are transcribed
verbatim from their published form and treated as hypotheses to be audited
against the numeric propagator; they are never silently corrected.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hilbert import QuantumState, is_hermitian

EIGH_ATOL = 1e-10


class DynamicsError(ValueError):
    pass


@dataclass(frozen=True)
class Propagator:
    """Spectral decomposition H = V diag(eps) V^dagger, reusable for any time."""

    hamiltonian: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @classmethod
    def build(cls, hamiltonian: np.ndarray, atol: float = 1e-10) -> "Propagator":
        hamiltonian = np.asarray(hamiltonian, dtype=complex)
        if hamiltonian.ndim != 2 or hamiltonian.shape[0] != hamiltonian.shape[1]:
            raise DynamicsError(f"Hamiltonian must be square, got shape {hamiltonian.shape}")
        if not is_hermitian(hamiltonian, atol):
            raise DynamicsError("Hamiltonian is not Hermitian within tolerance")
        eps, v = np.linalg.eigh(hamiltonian)
        return cls(hamiltonian, eps, v)

    def matrix(self, tau: float) -> np.ndarray:
        """The unitary exp(-i H tau)."""
        phases = np.exp(-1j * self.eigenvalues * tau)
        return (self.eigenvectors * phases) @ self.eigenvectors.conj().T

    def apply(self, psi: np.ndarray, tau: float) -> np.ndarray:
        coeff = self.eigenvectors.conj().T @ psi
        return self.eigenvectors @ (np.exp(-1j * self.eigenvalues * tau) * coeff)

    def apply_many(self, psi: np.ndarray, taus: np.ndarray) -> np.ndarray:
        """Vectorized evolution; returns an array of shape (len(taus), dim)."""
        coeff = self.eigenvectors.conj().T @ psi
        phases = np.exp(-1j * np.outer(np.asarray(taus), self.eigenvalues))
        return (phases * coeff) @ self.eigenvectors.T


def evolve(state: QuantumState, hamiltonian: np.ndarray, tau: float) -> QuantumState:
    """|psi(tau)> = exp(-i H tau) |psi(0)> for a pure, normalized state."""
    if state.is_density:
        raise DynamicsError("evolve expects a pure state")
    prop = Propagator.build(hamiltonian)
    if prop.hamiltonian.shape[0] != state.layout.total_dim:
        raise DynamicsError("Hamiltonian dimension does not match state layout")
    return QuantumState.pure(state.layout, prop.apply(state.vector, tau))


def _sqrtm_psd(rho: np.ndarray) -> np.ndarray:
    vals, vecs = np.linalg.eigh(rho)
    vals = np.clip(vals, 0.0, None)
    return (vecs * np.sqrt(vals)) @ vecs.conj().T


def fidelity(state_a: QuantumState, state_b: QuantumState) -> float:
    """|<a|b>|^2 for pure pairs, Uhlmann fidelity otherwise."""
    if state_a.layout.dims != state_b.layout.dims:
        raise DynamicsError("states live on different layouts")
    if not state_a.is_density and not state_b.is_density:
        return float(abs(np.vdot(state_a.vector, state_b.vector)) ** 2)
    rho = state_a.density_matrix()
    sigma = state_b.density_matrix()
    sq = _sqrtm_psd(rho)
    inner = _sqrtm_psd(sq @ sigma @ sq)
    f = float(np.trace(inner).real ** 2)
    return min(max(f, 0.0), 1.0)


@dataclass(frozen=True)
class AnalyticAmplitudes:
    """Closed-form amplitudes at one time, plus their summed norm.

    The norm is reported rather than asserted: the published expressions do
    not conserve it everywhere, and that deviation is a finding, not a bug
    in the transcription.
    """

    scheme: str  # "qubit_g" or "evanescent_w"
    values: np.ndarray
    kets: tuple[str, ...]

    @property
    def norm(self) -> float:
        weights = np.ones(len(self.values))
        if self.scheme == "qubit_g":
            weights[3] = 2.0  # G4 multiplies (|00g10> + |00g01>)
        return float(np.sum(weights * np.abs(self.values) ** 2))


def analytic_qubit_amplitudes(theta: float, J: float, g: float, tau: float) -> AnalyticAmplitudes:
    """Published G1..G4 for the bridge-qubit coupling, transcribed literally.

    tau is the normalized time g*t; J is in the same rate units as g.
    """
    if g <= 0:
        raise DynamicsError("g must be > 0")
    t = tau / g
    cs, sn = np.cos(theta), np.sin(theta)
    alpha = 1j * J
    gamma = np.exp(alpha * t) * (cs + sn)
    delta_sq = 1j * (16.0 + (J / g) ** 2)  # square of Delta = sqrt(i[16 + (J/g)^2])
    beta = (np.exp(alpha * t / 2) * (cs + sn)
            * (delta_sq * np.cosh(delta_sq * g * t) + 1j * J * np.sinh(delta_sq * g * t) / g)
            ) / delta_sq
    g1 = 0.25 * (2 * np.exp(-alpha * t) * (cs - sn) + gamma + beta)
    g2 = 0.25 * (2 * np.exp(-alpha * t) * (sn - cs) + gamma + beta)
    g3 = 2j * gamma * np.exp(-alpha * t / 2) * np.sinh(delta_sq * g * t / 2) / delta_sq
    g4 = ((cs + sn) * np.exp((alpha - delta_sq * g) * t / 2) / (8 * g * delta_sq)) * (
        1j * (np.exp(delta_sq * g * t) - 1) * J
        + (1 + np.exp(delta_sq * g * t) - 2 * np.exp((alpha + delta_sq * g) * t / 2)) * delta_sq * g)
    return AnalyticAmplitudes(
        scheme="qubit_g",
        values=np.array([g1, g2, g3, g4]),
        kets=("|10g00>", "|01g00>", "|00e00>", "|00g10>+|00g01>"),
    )


def analytic_evanescent_amplitudes(theta: float, J: float, tau: float) -> AnalyticAmplitudes:
    """Published W1..W4 for the evanescent coupling, transcribed literally.

    tau is the normalized time lambda*t; J is in units of lambda.
    """
    cs, sn = np.cos(theta), np.sin(theta)
    # the published argument is J*lambda*t, i.e. J*tau in normalized units
    w1 = np.cos(tau) * (cs * np.cos(J * tau) + 1j * cs * np.sin(J * tau))
    w2 = np.cos(tau) * (sn * np.cos(J * tau) + 1j * sn * np.sin(J * tau))
    w3 = np.sin(tau) * (1j * cs * np.cos(J * tau) - sn * np.sin(J * tau))
    w4 = np.sin(tau) * (1j * cs * np.sin(J * tau) - cs * np.sin(J * tau))
    return AnalyticAmplitudes(
        scheme="evanescent_w",
        values=np.array([w1, w2, w3, w4]),
        kets=("|1000>", "|0100>", "|0010>", "|0001>"),
    )
