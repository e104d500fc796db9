import pytest
from fastapi.testclient import TestClient

from krcrystal.main import app

D4_22 = {"cartan": ["D", 4, 1], "r": 2, "s": 2}
B11 = {"cartan": ["D", 4, 1], "r": 1, "s": 1}


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "ok"
    assert body["cached_crystals"] >= 0
    assert response.headers["X-Request-Id"]


def test_request_id_is_echoed(client):
    response = client.get("/health", headers={"X-Request-Id": "abc-123"})
    assert response.headers["X-Request-Id"] == "abc-123"


def test_step_and_sigma(client):
    response = client.post("/crystals/step", json={**D4_22, "rows": [[3], [1]], "i": 0, "direction": "e"})
    assert response.json() == {"rows": [[-2], [3]]}
    response = client.post("/crystals/step", json={**D4_22, "rows": [], "i": 1, "direction": "f"})
    assert response.json() == {"rows": None}
    response = client.post("/crystals/sigma", json={**D4_22, "rows": [[3], [1]]})
    assert response.json() == {"rows": [[-2, -1], [2, 3]]}


def test_summary(client):
    body = client.post("/crystals/summary", json=D4_22).json()
    assert body["crystal"] == "B^{2,2} of type D_4^(1)"
    assert body["size"] == 329


def test_eps_phi(client):
    body = client.post("/crystals/eps-phi", json={**B11, "rows": [[1]]}).json()
    assert body == {"epsilon": [1, 0, 0, 0, 0], "phi": [0, 1, 0, 0, 0], "level": 1}


def test_minimal(client):
    assert len(client.post("/crystals/minimal/list", json=D4_22).json()) == 11
    body = client.post("/crystals/minimal", json={**D4_22, "weight": [0, 2, 0, 0, 0]}).json()
    assert body == {"rows": [[-2, -1], [1, 2]]}


def test_verify(client):
    body = client.post("/crystals/verify", json={**B11, "kind": "perfect"}).json()
    assert body["passed"] is True
    assert {c["condition"] for c in body["conditions"]} >= {"tensor_square_connected", "minimal_bijections"}


def test_graph_is_plain_text(client):
    response = client.post("/crystals/graph", json=B11)
    assert response.headers["content-type"].startswith("text/plain")
    assert response.text.count("->") == 10


def test_diagram_routes(client):
    ref = {"cartan": ["D", 6, 1], "r": 4, "s": 2}
    diagram = [["+"], [""], ["", "+"], ["", ""]]
    assert client.post("/diagrams/phi", json={**ref, "diagram": diagram}).json() == {
        "rows": [[4], [3], [2, 2], [1, 1]]
    }
    string = client.post("/diagrams/string", json={**ref, "diagram": diagram}).json()["string"]
    assert len(string) == 0
    flipped = client.post("/diagrams/s-involution", json={**ref, "diagram": diagram}).json()
    assert flipped == {"diagram": [["-"], [""], ["", "-"], ["", ""]]}


def test_pair_routes(client):
    ref = {"cartan": ["D", 6, 1], "r": 4, "s": 3}
    P = [["-"], ["+"], ["", "+", "-"], ["", "", ""]]
    p = [["-"], ["", "", "+"]]
    rows = client.post("/diagrams/psi", json={**ref, "P": P, "p": p}).json()["rows"]
    assert rows == [[-3], [-4], [3, 4, -1], [1, 3, 3]]
    assert client.post("/diagrams/pair-of", json={**ref, "rows": rows}).json() == {"P": P, "p": p}


def test_e1_route(client):
    ref = {"cartan": ["D", 8, 1], "r": 6, "s": 4}
    P = [["-"], [""], ["", "+"], ["", ""], ["", "", "+", "-"], ["", "", "", ""]]
    p = [["+"], [""], ["", "-"], ["", "+"], ["", "", "", "+"]]
    body = client.post("/diagrams/e1-pair", json={**ref, "P": P, "p": p}).json()
    assert body["pair"]["p"] == [[""], ["", "-"], ["", "+"], ["", "", "", "+"]]


def test_weight_diagram_route(client):
    ref = {"cartan": ["D", 8, 1], "r": 4, "s": 9}
    body = client.post("/diagrams/of-weight", json={**ref, "weight": [1, 2, 1, 1, 0, 1, 0, 0, 0]}).json()
    assert body["diagram"][0] == ["", "", "-"]


@pytest.mark.parametrize(
    "path, payload, status, title",
    [
        ("/crystals/sigma", {"cartan": ["D", 3, 1], "r": 1, "s": 1, "rows": []}, 422, "Unknown Cartan type"),
        ("/crystals/sigma", {**D4_22, "rows": [[1], [2]]}, 422, "Invalid element"),
        ("/crystals/minimal", {**D4_22, "weight": [1, 1]}, 422, "Malformed document"),
        ("/diagrams/phi", {**D4_22, "diagram": [["+"], ["-"]]}, 422, "Invalid +/- diagram"),
    ],
)
def test_errors_use_the_envelope(client, path, payload, status, title):
    response = client.post(path, json=payload)
    assert response.status_code == status
    body = response.json()
    assert body["ok"] is False
    assert body["title"] == title
    assert body["hint"]
