import numpy as np
import pytest

from cavitylink.entanglement import (
    Bipartition,
    ConcurrenceError,
    ConcurrenceTrace,
    bipartition_from_label,
    concurrence,
    concurrence_of_bipartition,
    detect_plateaus,
    detect_zero_intervals,
    project_mode_pair_to_qubits,
    pure_state_concurrence,
)
from cavitylink.hilbert import QuantumState, SystemLayout, basis_state


def _bell_rho():
    v = np.array([1.0, 0.0, 0.0, 1.0]) / np.sqrt(2)
    return np.outer(v, v.conj())


def test_concurrence_of_bell_and_product_states():
    assert np.isclose(concurrence(_bell_rho()), 1.0)
    product = np.zeros((4, 4), dtype=complex)
    product[0, 0] = 1.0
    assert np.isclose(concurrence(product), 0.0)
    assert np.isclose(concurrence(0.25 * np.eye(4)), 0.0)


def test_concurrence_of_werner_states():
    """C(p) = max(0, (3p - 1)/2) for p |Bell><Bell| + (1-p) I/4."""
    for p in (0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0):
        rho = p * _bell_rho() + (1.0 - p) * 0.25 * np.eye(4)
        assert np.isclose(concurrence(rho), max(0.0, (3.0 * p - 1.0) / 2.0), atol=1e-10)


def test_concurrence_matches_pure_state_closed_form():
    rng = np.random.default_rng(11)
    for _ in range(25):
        v = rng.normal(size=4) + 1j * rng.normal(size=4)
        v /= np.linalg.norm(v)
        rho = np.outer(v, v.conj())
        assert np.isclose(concurrence(rho), pure_state_concurrence(v), atol=1e-9)


def test_concurrence_input_validation():
    with pytest.raises(ConcurrenceError):
        concurrence(np.eye(3))
    with pytest.raises(ConcurrenceError):
        concurrence(np.eye(4))  # trace 4
    bad = _bell_rho().copy()
    bad[0, 1] = 0.5
    with pytest.raises(ConcurrenceError):
        concurrence(bad)


def test_bipartition_parsing():
    lay = SystemLayout.with_qubit()
    bp = bipartition_from_label(lay, "a1b2")
    assert (bp.site_a, bp.site_b) == (0, 3)
    bp = bipartition_from_label(lay, "a2q")
    assert (bp.site_a, bp.site_b) == (2, 4)
    with pytest.raises(ConcurrenceError):
        bipartition_from_label(lay, "a1xx")


def test_concurrence_of_bipartition_orderings():
    lay = SystemLayout.modes()
    v = (basis_state(lay, (1, 0, 0, 0)).vector
         + basis_state(lay, (0, 0, 0, 1)).vector) / np.sqrt(2)
    st = QuantumState.pure(lay, v)
    assert np.isclose(concurrence_of_bipartition(st, Bipartition.of(lay, "a1", "b2")), 1.0)
    # swapped site order must give the same value
    assert np.isclose(concurrence_of_bipartition(st, Bipartition(3, 0, "b2a1")), 1.0)
    assert np.isclose(concurrence_of_bipartition(st, Bipartition.of(lay, "b1", "a2")), 0.0,
                      atol=1e-12)


def test_project_mode_pair_to_qubits_reports_leakage():
    # two modes with cutoff 2 (dim 3), amplitude on |02> is leakage
    v = np.zeros(9, dtype=complex)
    v[0] = np.sqrt(0.8)
    v[2] = np.sqrt(0.2)  # |0,2>
    rho = np.outer(v, v.conj())
    sub, leakage = project_mode_pair_to_qubits(rho)
    assert np.isclose(leakage, 0.2)
    assert np.isclose(np.trace(sub).real, 1.0)
    with pytest.raises(ConcurrenceError):
        project_mode_pair_to_qubits(np.eye(5))


def test_trace_validation_and_csv():
    taus = np.linspace(0.0, 1.0, 5)
    tr = ConcurrenceTrace(taus, np.array([0.0, 0.5, 1.0, 0.5, 0.0]), "a1b1",
                          {"config_hash": "deadbeef"})
    csv = tr.to_csv()
    lines = csv.strip().split("\n")
    assert lines[0] == "# bipartition=a1b1 config=deadbeef"
    assert lines[1] == "tau,concurrence"
    assert len(lines) == 7
    with pytest.raises(ConcurrenceError):
        ConcurrenceTrace(taus, np.zeros(3), "a1b1")
    with pytest.raises(ConcurrenceError):
        ConcurrenceTrace(taus[::-1], np.zeros(5), "a1b1")
    with pytest.raises(ConcurrenceError):
        ConcurrenceTrace(taus, np.array([0.0, 0.5, 1.5, 0.5, 0.0]), "a1b1")


def test_detect_zero_intervals_flat_touch_vs_transversal():
    taus = np.linspace(0.0, np.pi, 2001)
    # quartic flat touch at pi/2 -> wide sub-epsilon interval
    quartic = ConcurrenceTrace(taus, np.cos(taus) ** 4, "a1b1")
    intervals = detect_zero_intervals(quartic, epsilon=1e-4, min_width=0.05)
    assert len(intervals) == 1
    assert intervals[0].kind == "sudden_death"
    assert intervals[0].width > 0.05
    assert intervals[0].tau_start < np.pi / 2 < intervals[0].tau_end
    # quadratic transversal touch -> narrow, filtered out by min_width
    quadratic = ConcurrenceTrace(taus, np.cos(taus) ** 2, "a1b1")
    assert detect_zero_intervals(quadratic, epsilon=1e-4, min_width=0.05) == []


def test_detect_zero_intervals_bisection_refinement():
    taus = np.linspace(0.0, np.pi, 301)  # coarse grid
    f = lambda t: np.cos(t) ** 4
    tr = ConcurrenceTrace(taus, f(taus), "a1b1")
    (iv,) = detect_zero_intervals(tr, epsilon=1e-4, min_width=0.05, evaluator=f)
    # C = eps at pi/2 -/+ acos(eps^(1/4)); refined endpoints within 2e-4
    half_width = np.pi / 2 - np.arccos(1e-1)
    assert abs(iv.tau_start - (np.pi / 2 - half_width)) < 2e-4
    assert abs(iv.tau_end - (np.pi / 2 + half_width)) < 2e-4


def test_detect_zero_intervals_initially_zero():
    taus = np.linspace(0.0, 2.0, 401)
    vals = np.clip(np.sin(taus - 0.5), 0.0, 1.0)
    tr = ConcurrenceTrace(taus, vals, "a2b2")
    ivs = detect_zero_intervals(tr, epsilon=1e-4, min_width=0.05)
    assert ivs and ivs[0].kind == "initially_zero"
    assert ivs[0].tau_start == 0.0
    with pytest.raises(ConcurrenceError):
        detect_zero_intervals(tr, epsilon=0.0)


def test_detect_plateaus():
    taus = np.linspace(0.0, 3.0, 601)
    vals = np.where(taus < 1.0, 0.5 * taus, 0.5)
    tr = ConcurrenceTrace(taus, vals, "a1b1")
    plats = detect_plateaus(tr, epsilon=1e-3, min_width=0.3)
    assert len(plats) == 1
    assert plats[0].tau_end == 3.0
    assert np.isclose(plats[0].level, 0.5, atol=1e-3)
    ramp = ConcurrenceTrace(taus, taus / 3.0, "a1b1")
    assert detect_plateaus(ramp, epsilon=1e-3, min_width=0.3) == []
