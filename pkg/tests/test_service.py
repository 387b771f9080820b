""" HTTP endpoints of the qcorr service """

# Import necessary libraries
import math
import pytest
import numpy as np

# Import custom modules
from linalg_core.operators import denseOperator
from linalg_core.serialization import operatorToJson
from fock_majorana.fock_algebra import buildFock
from fock_majorana.gaussian_states import a8State
from service.app import app

BELL_VECTOR = {"dim": 4, "factor_dims": [2, 2],
               "amplitudes": [[1 / math.sqrt(2), 0], [0, 0], [0, 0], [1 / math.sqrt(2), 0]]}

@pytest.fixture
def client():
    app.config["TESTING"] = True
    with app.test_client() as client:
        yield client

def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.get_json()["service"] == "qcorr-api"

def test_witness_constant(client):
    response = client.post("/witness/constant", json={"class": "dist", "dims": [2, 2]})
    body = response.get_json()
    assert response.status_code == 200
    assert body["success"]
    assert body["result"]["c"] == "1/2"
    assert body["result"]["alpha"] == "1/10"

def test_large_gaussian_returns_only_the_constant(client):
    body = client.post("/witness/constant", json={"class": "gaussian", "d": 8}).get_json()
    assert set(body["result"]) == {"class", "dims", "c"}

def test_unknown_class_is_a_bad_request(client):
    response = client.post("/witness/constant", json={"class": "furniture", "dims": [2, 2]})
    assert response.status_code == 400
    assert not response.get_json()["success"]

def test_missing_body_is_a_bad_request(client):
    response = client.post("/witness/constant", data="not json", content_type="text/plain")
    assert response.status_code == 400

def test_invariant_of_bell_state(client):
    body = client.post("/class/invariant", json={"class": "dist", "dims": "2,2", "state": BELL_VECTOR}).get_json()
    assert body["result"]["invariant"] == pytest.approx(0.25)

def test_invariant_needs_a_state(client):
    response = client.post("/class/invariant", json={"class": "dist", "dims": "2,2"})
    assert response.status_code == 400

def test_two_qubit_concurrence(client):
    psi = np.array([1, 0, 0, 1], dtype=complex) / math.sqrt(2)
    state = operatorToJson(denseOperator(np.outer(psi, psi.conj()), (2, 2)))
    body = client.post("/conc/two-qubit", json={"state": state}).get_json()
    assert body["result"]["concurrence"] == pytest.approx(1.0)

def test_contract_failures_are_unprocessable(client):
    state = operatorToJson(denseOperator(np.eye(3) / 3))
    response = client.post("/conc/two-qubit", json={"state": state})
    assert response.status_code == 422

def test_four_mode_decision_on_a8(client):
    state = operatorToJson(denseOperator(a8State(buildFock(4))))
    result = client.post("/conc/gauss4", json={"state": state}).get_json()["result"]
    assert result["convex_gaussian"] is False
    assert result["fidelity"] == pytest.approx(0.5)

def test_typicality_parameters(client):
    body = client.post("/typicality/params", json={"class": "ferm", "d": 4, "L": 2,
                                                   "spectrum": [1 / 6] * 6}).get_json()
    assert body["result"]["p_max_cr"] == "3/4"
    assert body["result"]["analytic_bound"] == 0.0
