"""CLI thin client: golden outputs, exit codes, scan file formats."""

from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from takagi.cli import main


@pytest.fixture
def runner():
    return CliRunner()


class TestEval:
    def test_exact_golden(self, runner):
        result = runner.invoke(main, ["eval", "1/3", "--exact"])
        assert result.exit_code == 0
        record = json.loads(result.output)
        assert record["input"] == "1/3"
        assert record["payload"]["value"] == "2/3"
        assert record["exact"] is True

    def test_certified_terms_flag(self, runner):
        result = runner.invoke(main, ["eval", "1/3", "--terms", "10"])
        record = json.loads(result.output)
        assert record["payload"]["terms_used"] == 10
        assert record["payload"]["error_bound"] == "1/1024"

    def test_env_default_terms(self, runner):
        result = runner.invoke(main, ["eval", "1/3"], env={"TAKAGI_DEFAULT_TERMS": "8"})
        assert json.loads(result.output)["payload"]["terms_used"] == 8

    def test_expansion_literal(self, runner):
        result = runner.invoke(main, ["eval", "0.(01)", "--exact"])
        assert json.loads(result.output)["payload"]["value"] == "2/3"

    def test_parse_error_exit_code(self, runner):
        result = runner.invoke(main, ["eval", "abc"])
        assert result.exit_code == 2
        assert "abc" in result.output

    def test_zero_denominator_exit_code(self, runner):
        result = runner.invoke(main, ["eval", "1/0"])
        assert result.exit_code == 2
        assert "zero denominator" in result.output


class TestClassify:
    def test_golden(self, runner):
        result = runner.invoke(main, ["classify", "1/3"])
        payload = json.loads(result.output)["payload"]
        assert payload["case"] == "TailAlternating"
        assert payload["superdifferential"] == "[0,1]"
        assert payload["local_max"] is True

    def test_dyadic(self, runner):
        payload = json.loads(runner.invoke(main, ["classify", "1/2"]).output)["payload"]
        assert payload["case"] == "Dyadic"
        assert payload["subdifferential"] == "R"


class TestDini:
    def test_divergence_flag(self, runner):
        result = runner.invoke(main, ["dini", "1/2", "--depth", "20"])
        payload = json.loads(result.output)["payload"]
        assert payload["divergent_up"] is True

    def test_domain_error_exit_code(self, runner):
        result = runner.invoke(main, ["dini", "1/3", "--depth", "3"])
        assert result.exit_code == 3


class TestMaxset:
    def test_golden(self, runner):
        payload = json.loads(runner.invoke(main, ["maxset", "2/5"]).output)["payload"]
        assert payload["in_M"] is True
        assert payload["in_script_A"]["m"] == 1


class TestScan:
    def test_csv_golden(self, runner, tmp_path):
        out = tmp_path / "grid.csv"
        result = runner.invoke(
            main, ["scan", "--from", "0", "--to", "1", "--step", "1/3", "--out", str(out)]
        )
        assert result.exit_code == 0
        expected = (
            "x,t_exact,t_decimal,case,superdiff\n"
            "0,0,0.000000000000,Dyadic,empty\n"
            '1/3,2/3,0.666666666667,TailAlternating,"[0,1]"\n'
            '2/3,2/3,0.666666666667,TailAlternating,"[-1,0]"\n'
            "1,0,0.000000000000,Dyadic,empty\n"
        )
        assert out.read_text() == expected

    def test_jsonl(self, runner, tmp_path):
        out = tmp_path / "grid.jsonl"
        result = runner.invoke(
            main,
            ["scan", "--from", "0", "--to", "1/2", "--step", "1/4", "--out", str(out), "--format", "jsonl"],
        )
        assert result.exit_code == 0
        rows = [json.loads(line) for line in out.read_text().splitlines()]
        assert [row["x"] for row in rows] == ["0", "1/4", "1/2"]
        assert rows[1]["t_exact"] == "1/2"
        assert rows[0]["superdiff"] == "empty"

    def test_reproducible_bytes(self, runner, tmp_path):
        args = ["scan", "--from", "0", "--to", "1", "--step", "1/8"]
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        assert runner.invoke(main, args + ["--out", str(out1)]).exit_code == 0
        assert runner.invoke(main, args + ["--out", str(out2)]).exit_code == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_step_zero_exit_code(self, runner, tmp_path):
        result = runner.invoke(
            main, ["scan", "--from", "0", "--to", "1", "--step", "0", "--out", str(tmp_path / "x.csv")]
        )
        assert result.exit_code == 3

    def test_unwritable_path_exit_code(self, runner, tmp_path):
        result = runner.invoke(
            main,
            ["scan", "--from", "0", "--to", "1", "--step", "1/2", "--out", str(tmp_path / "no" / "dir" / "x.csv")],
        )
        assert result.exit_code == 3


class TestReproducibility:
    def test_identical_invocations(self, runner):
        first = runner.invoke(main, ["classify", "5/12"]).output
        second = runner.invoke(main, ["classify", "5/12"]).output
        assert first == second
