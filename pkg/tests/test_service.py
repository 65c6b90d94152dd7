"""HTTP service tests over the in-process test client."""

from fastapi.testclient import TestClient

from conereach.service import app

from conftest import EXAMPLE_ONE, HBAR

client = TestClient(app)


def test_health():
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json()["status"] == "ok"


def test_analyze_endpoint_example_one():
    resp = client.post("/analyze", json={"input": EXAMPLE_ONE, "check": "reach"})
    assert resp.status_code == 200
    verdicts = resp.json()["verdicts"]
    assert len(verdicts) == 1
    assert verdicts[0]["result"] == "HOLDS"
    assert verdicts[0]["property"] == "REACHABILITY"


def test_analyze_endpoint_hbar_all():
    resp = client.post("/analyze", json={"input": HBAR})
    assert resp.status_code == 200
    by_prop = {v["property"]: v["result"] for v in resp.json()["verdicts"]}
    assert by_prop == {"REACHABILITY": "FAILS", "NULL_CONTROLLABILITY": "HOLDS"}


def test_analyze_rejects_malformed():
    resp = client.post("/analyze", json={"input": {"n": 1}})
    assert resp.status_code == 422
    detail = resp.json()["detail"]
    assert any("exactly one of 'system' or 'graph'" in str(e["msg"]) for e in detail)


def test_oracle_endpoint():
    resp = client.post("/oracle", json={"input": EXAMPLE_ONE,
                                        "direction": "reach", "steps": 3})
    assert resp.status_code == 200
    data = resp.json()
    assert data["saturated_at"] == 1
    assert data["cones"][1]["lines"] == [["1"]]


def test_simulate_endpoint():
    resp = client.post("/simulate", json={"input": HBAR, "x0": ["-1"],
                                          "steps": 3, "seed": 5})
    assert resp.status_code == 200
    data = resp.json()
    assert data["infeasible"] is False
    assert data["trajectory"][0] == [-1.0]
    resp2 = client.post("/simulate", json={"input": EXAMPLE_ONE, "x0": ["-1"],
                                           "steps": 2})
    assert resp2.json()["infeasible"] is True


def test_dual_endpoint():
    resp = client.post("/dual", json=HBAR)
    assert resp.status_code == 200
    data = resp.json()
    assert data["graph"]["ineqs"] == [["1", "0"]]
    assert data["graph"]["eqs"] == [["0", "1"]]


def test_info_endpoint():
    resp = client.post("/info", json=EXAMPLE_ONE)
    assert resp.status_code == 200
    data = resp.json()
    assert data["n"] == 1
    assert data["strict"] is False
    assert data["dom"]["rays"] == [["1"]]
    assert data["r_minus"] == [["1"]]
