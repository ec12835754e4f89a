"""HTTP API surface: payload shapes, error kinds, determinism."""

from __future__ import annotations

import warnings
from fractions import Fraction

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from starlette.testclient import TestClient

from takagi import takagi_exact
from takagi.service.app import create_app


@pytest.fixture(scope="module")
def client():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return TestClient(create_app())


class TestHealth:
    def test_health(self, client):
        assert client.get("/health").json() == {"status": "ok"}


class TestEval:
    def test_exact(self, client):
        r = client.post("/eval", json={"point": "1/3", "exact": True})
        assert r.status_code == 200
        record = r.json()
        assert record["command"] == "eval"
        assert record["exact"] is True
        assert record["payload"]["value"] == "2/3"
        assert record["payload"]["decimal"] == "0.666666666667"

    def test_exact_at_zero_and_sixth(self, client):
        assert client.post("/eval", json={"point": "0", "exact": True}).json()["payload"]["value"] == "0"
        assert client.post("/eval", json={"point": "1/6", "exact": True}).json()["payload"]["value"] == "1/2"

    def test_expansion_literal_input(self, client):
        r = client.post("/eval", json={"point": "0.01(10)", "exact": True})
        assert r.json()["payload"]["value"] == "2/3"

    def test_certified_default_terms(self, client):
        r = client.post("/eval", json={"point": "1/3"})
        payload = r.json()["payload"]
        assert payload["terms_used"] == 64
        assert payload["error_bound"] == f"1/{2**64}"

    def test_certified_env_override(self, client, monkeypatch):
        monkeypatch.setenv("TAKAGI_DEFAULT_TERMS", "12")
        payload = client.post("/eval", json={"point": "1/3"}).json()["payload"]
        assert payload["terms_used"] == 12
        value = Fraction(payload["value"])
        assert abs(value - Fraction(2, 3)) <= Fraction(1, 2**12)

    def test_certified_explicit_terms_wins(self, client, monkeypatch):
        monkeypatch.setenv("TAKAGI_DEFAULT_TERMS", "12")
        payload = client.post("/eval", json={"point": "1/3", "terms": 20}).json()["payload"]
        assert payload["terms_used"] == 20

    def test_parse_error_names_token(self, client):
        r = client.post("/eval", json={"point": "abc"})
        assert r.status_code == 400
        body = r.json()
        assert body["error"] == "parse"
        assert "abc" in body["message"]

    def test_zero_denominator_distinct_message(self, client):
        r = client.post("/eval", json={"point": "1/0"})
        assert r.status_code == 400
        body = r.json()
        assert body["error"] == "parse"
        assert "zero denominator" in body["message"]


class TestClassify:
    def test_interval_point(self, client):
        payload = client.post("/classify", json={"point": "1/3"}).json()["payload"]
        assert payload["case"] == "TailAlternating"
        assert payload["superdifferential"] == "[0,1]"
        assert payload["local_max"] is True
        assert (payload["slope_liminf"], payload["slope_limsup"]) == ("0", "1")

    def test_dyadic_point(self, client):
        payload = client.post("/classify", json={"point": "1/2"}).json()["payload"]
        assert payload["case"] == "Dyadic"
        assert payload["superdifferential"] == "empty"
        assert payload["subdifferential"] == "R"
        assert payload["slope_liminf"] is None

    def test_irregular_point(self, client):
        payload = client.post("/classify", json={"point": "1/9"}).json()["payload"]
        assert payload["case"] == "Irregular"
        assert payload["superdifferential"] == "empty"
        assert payload["subdifferential"] == "empty"

    def test_infinite_slope_rendering(self, client):
        payload = client.post("/classify", json={"point": "1/7"}).json()["payload"]
        assert payload["slope_liminf"] == "+inf"
        assert payload["slope_limsup"] == "+inf"


class TestDini:
    def test_dyadic_divergence_and_table(self, client):
        payload = client.post("/dini", json={"point": "1/2", "depth": 20}).json()["payload"]
        assert payload["divergent_up"] is True
        rows = payload["dyadic_quotients"]
        assert rows[0] == {"p": 3, "quotient": "1", "predicted": 1}
        for row in rows:
            assert Fraction(row["quotient"]) == row["predicted"]

    def test_mirror_table_exact(self, client):
        payload = client.post("/dini", json={"point": "1/3", "depth": 20}).json()["payload"]
        rows = payload["mirror_quotients"]
        assert rows[0] == {"n": 3, "x_prime": "1/6", "quotient": "1", "predicted": 1}
        for row in rows:
            assert Fraction(row["quotient"]) == row["predicted"]

    def test_estimates_bracket_interval(self, client):
        payload = client.post("/dini", json={"point": "1/3", "depth": 20}).json()["payload"]
        assert float(payload["D_plus_est"]) <= 0.05
        assert 0.95 <= float(payload["d_minus_est"]) <= 1.05

    def test_depth_precondition(self, client):
        r = client.post("/dini", json={"point": "1/3", "depth": 3})
        assert r.status_code == 400
        assert r.json()["error"] == "domain"


class TestMaxset:
    def test_witness_payload(self, client):
        payload = client.post("/maxset", json={"point": "1/5"}).json()["payload"]
        assert payload["in_M"] is False
        assert payload["in_A"] is None
        assert payload["in_script_A"] == {"m": 2, "dyadic_part": "0", "scaled_point": "2/5"}
        assert payload["max_value"] is False

    def test_max_point(self, client):
        payload = client.post("/maxset", json={"point": "1/3"}).json()["payload"]
        assert payload["in_M"] is True
        assert payload["in_A"] == 1
        assert payload["max_value"] is True


class TestScan:
    def test_thirds_grid(self, client):
        r = client.post("/scan", json={"start": "0", "stop": "1", "step": "1/3"})
        rows = r.json()["rows"]
        assert [row["x"] for row in rows] == ["0", "1/3", "2/3", "1"]
        assert [row["t_exact"] for row in rows] == ["0", "2/3", "2/3", "0"]

    def test_row_bound_and_count(self, client):
        r = client.post("/scan", json={"start": "0", "stop": "1", "step": "1/64"})
        rows = r.json()["rows"]
        assert len(rows) == 65
        assert all(Fraction(row["t_exact"]) <= Fraction(2, 3) for row in rows)

    def test_last_point_clipped(self, client):
        r = client.post("/scan", json={"start": "0", "stop": "1/2", "step": "1/3"})
        assert [row["x"] for row in r.json()["rows"]] == ["0", "1/3"]

    def test_step_zero_rejected(self, client):
        r = client.post("/scan", json={"start": "0", "stop": "1", "step": "0"})
        assert r.status_code == 400
        assert r.json()["error"] == "domain"

    def test_empty_range_rejected(self, client):
        r = client.post("/scan", json={"start": "1", "stop": "0", "step": "1/4"})
        assert r.status_code == 400


class TestDeterminism:
    def test_repeated_requests_identical(self, client):
        body = {"point": "5/12", "depth": 12, "width": 4}
        first = client.post("/dini", json=body).content
        second = client.post("/dini", json=body).content
        assert first == second

    def test_values_match_library(self, client):
        for point in ("1/3", "1/9", "11/12", "5/24"):
            payload = client.post("/eval", json={"point": point, "exact": True}).json()["payload"]
            assert Fraction(payload["value"]) == takagi_exact(Fraction(point))
