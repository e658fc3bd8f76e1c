import numpy as np
import pytest
from fastapi.testclient import TestClient

from cavitylink.service.app import app

client = TestClient(app)

EVAN = {"coupling": {"kind": "evanescent"}}
QUBIT = {"coupling": {"kind": "bridge_qubit"}}


def test_health():
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json()["status"] == "ok"


def test_simulate_endpoint():
    r = client.post("/simulate", json={
        "config": EVAN,
        "tau_grid": {"start": 0.0, "end": np.pi, "steps": 51},
        "observables": [{"kind": "concurrence", "bipartition": "a1b1"},
                        {"kind": "fidelity", "target": "transferred_bell"}],
    })
    assert r.status_code == 200
    d = r.json()
    assert len(d["taus"]) == 51
    assert set(d["series"]) == {"C_a1b1", "F_transferred_bell"}
    assert np.isclose(d["series"]["C_a1b1"][0], 1.0)
    assert "config_hash" in d["manifest"]
    assert "C_a1b1" in d["zero_intervals"]


def test_simulate_validation_errors():
    # pydantic-level: missing observables
    r = client.post("/simulate", json={"config": EVAN})
    assert r.status_code == 422
    # core-level: unknown bipartition label
    r = client.post("/simulate", json={
        "config": EVAN,
        "observables": [{"kind": "concurrence", "bipartition": "zz"}]})
    assert r.status_code == 422
    # core-level: gamma loss without a qubit
    r = client.post("/simulate", json={
        "config": EVAN,
        "observables": [{"kind": "concurrence", "bipartition": "a1b1"}],
        "losses": {"kappa": 0.05, "gamma": 0.005}})
    assert r.status_code == 422


def test_sweep_endpoint():
    r = client.post("/sweep", json={
        "config": EVAN, "tau": np.pi / 4,
        "j_count": 3, "theta_count": 3})
    assert r.status_code == 200
    d = r.json()
    assert len(d["j_values"]) == 3
    assert set(d["surfaces"]) == {"a1b2", "a2b1"}
    assert np.isclose(d["surfaces"]["a1b2"][0][0], 1.0, atol=1e-9)


def test_figures_listing_and_run():
    r = client.get("/figures")
    assert r.status_code == 200
    names = {f["name"] for f in r.json()}
    assert {"fig2a", "fig4b", "fig5", "fig14"} <= names
    r = client.post("/figures/fig2a", json={"steps": 21})
    assert r.status_code == 200
    d = r.json()
    assert set(d["traces"]) == {"qubit_C_a1b1", "qubit_C_a2b2",
                                "evanescent_C_a1b1", "evanescent_C_a2b2"}
    assert len(d["traces"]["qubit_C_a1b1"]["taus"]) == 21
    assert client.post("/figures/fig99", json={}).status_code == 404


def test_verify_endpoints():
    r = client.post("/verify/fiber-equivalence",
                    json={"nu": 1.0, "g": 1.0, "tau_steps": 31})
    assert r.status_code == 200
    assert r.json()["passed"]
    r = client.post("/verify/analytic-oracles")
    assert r.status_code == 200
    d = r.json()
    assert d["matches_documented_findings"]
    assert d["findings"]["g_formulas_match_at_tau0"]
    assert not d["findings"]["printed_norm_conserved"]
