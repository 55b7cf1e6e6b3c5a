"""
Tests for the HTTP API.
"""
import pytest
from fastapi.testclient import TestClient

from supercat.main import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as client:
        yield client


def test_root(client):
    response = client.get("/")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


def test_health(client):
    body = client.get("/health").json()
    assert body["app"] == "Super Catalan Verifier"
    assert "default_primes" in body


class TestCompute:
    def test_supercatalan(self, client):
        response = client.get("/api/v1/compute/supercatalan", params={"m": 2, "n": 3})
        assert response.status_code == 200
        assert response.json() == {"kind": "supercatalan", "m": 2, "n": 3, "value": "12"}

    def test_large_value_is_a_string(self, client):
        body = client.get("/api/v1/compute/centralbinom", params={"n": 100}).json()
        assert body["value"] == "90548514656103281165404177077484163874504589675413336841320"

    def test_missing_m(self, client):
        response = client.get("/api/v1/compute/supercatalan", params={"n": 3})
        assert response.status_code == 400

    def test_negative(self, client):
        response = client.get("/api/v1/compute/catalan", params={"n": -1})
        assert response.status_code == 400

    def test_unknown_kind(self, client):
        response = client.get("/api/v1/compute/fibonacci", params={"n": 3})
        assert response.status_code == 422


class TestVerify:
    def test_scan(self, client):
        response = client.post(
            "/api/v1/verify",
            json={"prime_min": 3, "prime_max": 13, "suites": ["thm11"]},
        )
        assert response.status_code == 200
        body = response.json()
        assert [r["index"] for r in body["records"]] == [3, 5, 7, 11, 13]
        assert body["totals"]["failed"] == 0

    def test_self_test(self, client):
        response = client.post(
            "/api/v1/verify",
            json={"prime_min": 5, "prime_max": 7, "suites": [], "self_test": True},
        )
        body = response.json()
        assert body["totals"]["failed"] == 1
        assert body["records"][0]["witness"]["index"] == 5

    def test_invalid_config(self, client):
        response = client.post("/api/v1/verify", json={"prime_min": 2})
        assert response.status_code == 422
