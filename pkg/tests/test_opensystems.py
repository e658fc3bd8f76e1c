import numpy as np
import pytest

from cavitylink.dynamics import Propagator
from cavitylink.hilbert import basis_state, embed_operator, number_op
from cavitylink.models import BridgeQubit, Evanescent, SystemConfig, total_hamiltonian
from cavitylink.opensystems import (
    IntegrationError,
    LindbladGenerator,
    LossConfig,
    LossConfigError,
    integrate,
    lindblad_rhs,
)


def test_loss_config_validation():
    with pytest.raises(LossConfigError):
        LossConfig(kappa=-1.0)
    with pytest.raises(LossConfigError):
        LossConfig(gamma=-1.0)


def test_gamma_requires_qubit_coupling():
    cfg = SystemConfig(coupling=Evanescent())
    with pytest.raises(LossConfigError):
        LindbladGenerator.build(cfg, LossConfig(kappa=0.1, gamma=0.01))
    gen = LindbladGenerator.build(cfg, LossConfig(kappa=0.1, gamma=0.0))
    assert len(gen.jump_ops) == 4
    gen_q = LindbladGenerator.build(SystemConfig(coupling=BridgeQubit()),
                                    LossConfig(kappa=0.1, gamma=0.01))
    assert len(gen_q.jump_ops) == 5


def test_decay_rate_convention():
    """With the factor-2 dissipator, <n>(tau) = exp(-2 kappa tau)."""
    kappa = 0.1
    cfg = SystemConfig(coupling=Evanescent(lam=0.0))
    lay = cfg.layout()
    gen = LindbladGenerator.build(cfg, LossConfig(kappa=kappa, gamma=0.0), lay)
    rho0 = basis_state(lay, (1, 0, 0, 0)).density_matrix()
    samples = np.array([0.5, 1.0, 2.0])
    _, rhos = integrate(gen, rho0, 2.0, dtau=1e-3, sample_taus=samples)
    n_a1 = embed_operator(lay, 0, number_op(2))
    for tau, rho in zip(samples, rhos):
        n = np.trace(n_a1 @ rho).real
        assert np.isclose(n, np.exp(-2.0 * kappa * tau), atol=1e-8)
        assert np.isclose(np.trace(rho).real, 1.0, atol=1e-10)


def test_lossless_integration_matches_unitary():
    cfg = SystemConfig(coupling=BridgeQubit(), J1=1.0, J2=1.0)
    lay = cfg.layout()
    gen = LindbladGenerator.build(cfg, LossConfig(kappa=0.0, gamma=0.0), lay)
    psi0 = basis_state(lay, (1, 0, 0, 0, 0))
    taus = np.array([0.4, 0.9])
    _, rhos = integrate(gen, psi0.density_matrix(), taus[-1], dtau=1e-3, sample_taus=taus)
    prop = Propagator.build(total_hamiltonian(cfg, lay))
    for tau, rho in zip(taus, rhos):
        psi = prop.apply(psi0.vector, tau)
        assert np.max(np.abs(rho - np.outer(psi, psi.conj()))) < 1e-9


def test_rhs_preserves_trace_and_hermiticity():
    cfg = SystemConfig(coupling=BridgeQubit())
    gen = LindbladGenerator.build(cfg, LossConfig())
    rng = np.random.default_rng(5)
    m = rng.normal(size=(32, 32)) + 1j * rng.normal(size=(32, 32))
    rho = m @ m.conj().T
    rho /= np.trace(rho)
    out = lindblad_rhs(gen, rho)
    assert abs(np.trace(out)) < 1e-12
    assert np.max(np.abs(out - out.conj().T)) < 1e-12
    with pytest.raises(LossConfigError):
        lindblad_rhs(gen, np.eye(4))


def test_integrate_sampling_validation():
    cfg = SystemConfig(coupling=Evanescent())
    gen = LindbladGenerator.build(cfg, LossConfig(kappa=0.05, gamma=0.0))
    rho0 = basis_state(cfg.layout(), (1, 0, 0, 0)).density_matrix()
    with pytest.raises(LossConfigError):
        integrate(gen, rho0, 1.0, dtau=0.0)
    with pytest.raises(LossConfigError):
        integrate(gen, rho0, 1.0, sample_taus=np.array([0.5, 0.2]))
    with pytest.raises(LossConfigError):
        integrate(gen, rho0, 1.0, sample_taus=np.array([2.0]))


def test_integrate_rejects_invalid_initial_state():
    cfg = SystemConfig(coupling=Evanescent())
    gen = LindbladGenerator.build(cfg, LossConfig(kappa=0.05, gamma=0.0))
    with pytest.raises(IntegrationError):
        integrate(gen, 2.0 * np.eye(16, dtype=complex) / 16.0, 0.1)


def test_fractional_steps_hit_samples_exactly():
    cfg = SystemConfig(coupling=Evanescent(lam=0.0))
    lay = cfg.layout()
    gen = LindbladGenerator.build(cfg, LossConfig(kappa=0.2, gamma=0.0), lay)
    rho0 = basis_state(lay, (1, 0, 0, 0)).density_matrix()
    # samples deliberately off the dtau grid
    samples = np.array([0.1234, 0.5001, 0.7777])
    out_taus, rhos = integrate(gen, rho0, samples[-1], dtau=1e-2, sample_taus=samples)
    n_a1 = embed_operator(lay, 0, number_op(2))
    for tau, rho in zip(out_taus, rhos):
        n = np.trace(n_a1 @ rho).real
        assert np.isclose(n, np.exp(-0.4 * tau), atol=1e-9)
