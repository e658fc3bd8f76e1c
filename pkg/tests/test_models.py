import numpy as np
import pytest

from cavitylink.hilbert import LayoutError, SystemLayout, basis_state, total_excitation_operator
from cavitylink.models import (
    BridgeQubit,
    ConfigError,
    Evanescent,
    Fiber,
    SystemConfig,
    build_coupling_hamiltonian,
    config_from_dict,
    config_to_dict,
    experimental_evanescent_config,
    experimental_qubit_config,
    total_hamiltonian,
)


def _single_excitation_block(h, layout, kets):
    vecs = [basis_state(layout, occ).vector for occ in kets]
    return np.array([[vi.conj() @ h @ vj for vj in vecs] for vi in vecs])


def test_qubit_hamiltonian_single_excitation_block():
    """Hand-built 5x5 matrix over {|a1>, |b1>, |a2>, |b2>, |e>}."""
    g1, g2, J1, J2 = 1.0, 1.3, 2.0, 0.7
    cfg = SystemConfig(coupling=BridgeQubit(g1=g1, g2=g2), J1=J1, J2=J2)
    lay = cfg.layout()
    h = total_hamiltonian(cfg, lay)
    kets = [(1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 1, 0, 0),
            (0, 0, 0, 1, 0), (0, 0, 0, 0, 1)]
    block = _single_excitation_block(h, lay, kets)
    expected = np.array([
        [0.0, J1, 0.0, 0.0, g1],
        [J1, 0.0, 0.0, 0.0, g1],
        [0.0, 0.0, 0.0, J2, g2],
        [0.0, 0.0, J2, 0.0, g2],
        [g1, g1, g2, g2, 0.0],
    ], dtype=complex)
    assert np.allclose(block, expected)
    # vacuum is decoupled in the rotating frame
    vac = basis_state(lay, (0, 0, 0, 0, 0)).vector
    assert np.allclose(h @ vac, 0.0)


def test_evanescent_hamiltonian_structure():
    lam, phi = 0.8, 0.4
    cfg = SystemConfig(coupling=Evanescent(lam=lam, phi=phi))
    lay = cfg.layout()
    h = build_coupling_hamiltonian(cfg, lay)
    a1 = basis_state(lay, (1, 0, 0, 0)).vector
    b1 = basis_state(lay, (0, 1, 0, 0)).vector
    a2 = basis_state(lay, (0, 0, 1, 0)).vector
    b2 = basis_state(lay, (0, 0, 0, 1)).vector
    # a1 <-> b2 and b1 <-> a2 hop with phase, no other links
    assert np.isclose(a1.conj() @ h @ b2, lam * np.exp(-1j * phi))
    assert np.isclose(b1.conj() @ h @ a2, lam * np.exp(-1j * phi))
    assert np.isclose(a1.conj() @ h @ b1, 0.0)
    assert np.isclose(a1.conj() @ h @ a2, 0.0)


def test_fiber_hamiltonian_structure():
    nu = 0.6
    cfg = SystemConfig(coupling=Fiber(nu=nu))
    lay = cfg.layout()
    h = build_coupling_hamiltonian(cfg, lay)
    c = basis_state(lay, (0, 0, 0, 0, 1)).vector
    for occ in [(1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 1, 0, 0), (0, 0, 0, 1, 0)]:
        m = basis_state(lay, occ).vector
        assert np.isclose(m.conj() @ h @ c, nu)


@pytest.mark.parametrize("coupling", [BridgeQubit(), Evanescent(phi=0.3), Fiber()])
def test_hamiltonian_is_hermitian_and_conserves_excitation(coupling):
    cfg = SystemConfig(coupling=coupling, J1=1.1, J2=0.4)
    lay = cfg.layout()
    h = total_hamiltonian(cfg, lay)
    assert np.allclose(h, h.conj().T)
    n_tot = total_excitation_operator(lay)
    assert np.max(np.abs(h @ n_tot - n_tot @ h)) < 1e-12


def test_qubit_coupling_needs_qubit_layout():
    cfg = SystemConfig(coupling=BridgeQubit())
    with pytest.raises(LayoutError):
        build_coupling_hamiltonian(cfg, SystemLayout.modes())


def test_coupling_parameter_validation():
    with pytest.raises(ConfigError):
        BridgeQubit(g1=-1.0)
    with pytest.raises(ConfigError):
        Evanescent(lam=-0.1)
    with pytest.raises(ConfigError):
        Evanescent(phi=7.0)
    with pytest.raises(ConfigError):
        Fiber(nu=-2.0)
    with pytest.raises(ConfigError):
        SystemConfig(coupling=Fiber(), J1=-1.0)
    with pytest.raises(ConfigError):
        SystemConfig(coupling=Fiber(), eta=0.0)


def test_config_dict_round_trip():
    cfg = SystemConfig(coupling=BridgeQubit(g1=1.0, g2=0.5), J1=2.0, J2=2.0)
    assert config_from_dict(config_to_dict(cfg)) == cfg
    cfg = SystemConfig(coupling=Evanescent(lam=1.0, phi=0.2), J1=0.3)
    assert config_from_dict(config_to_dict(cfg)) == cfg


def test_config_from_dict_validation():
    with pytest.raises(ConfigError):
        config_from_dict({"coupling": {"kind": "magic"}})
    with pytest.raises(ConfigError):
        config_from_dict({"coupling": {"kind": "fiber"}, "bogus": 1})
    with pytest.raises(ConfigError):
        config_from_dict({"coupling": {"kind": "fiber", "nope": 2}})
    with pytest.raises(ConfigError):
        config_from_dict({"coupling": {"kind": "fiber"}, "units": "GHz"})


def test_mhz_units_normalize_by_coupling_strength():
    cfg = config_from_dict({
        "units": "MHz",
        "coupling": {"kind": "bridge_qubit", "g1": 70.0, "g2": 70.0},
        "J1": 140.0, "J2": 140.0,
    })
    assert np.isclose(cfg.coupling.g1, 1.0)
    assert np.isclose(cfg.J1, 2.0)
    assert np.isclose(cfg.eta, 70.0)


def test_experimental_presets():
    q = experimental_qubit_config(J_over_g=2.0)
    assert np.isclose(q.J1, 2.0) and np.isclose(q.coupling.g1, 1.0)
    e = experimental_evanescent_config()
    assert np.isclose(e.coupling.lam, 1.0) and np.isclose(e.eta, 30.0)
