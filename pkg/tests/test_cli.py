"""End-to-end CLI tests through main(argv)."""

import json
import math

import pytest

from psystem.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestTables:
    def test_deterministic(self, capsys):
        args = ["tables", "--betas", "0.25", "--v0-tildes", "0.1", "2"]
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second

    def test_golden_rows(self, capsys):
        code, out, _ = run(capsys, "tables", "--betas", "0.25", "2",
                           "--v0-tildes", "0.1", "10")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "beta,v0_tilde,ogden,m_kirchhoff,blatzko_f025,blatzko_f05"
        rows = {tuple(l.split(",")[:2]): l.split(",") for l in lines[1:]}
        assert rows[("0.25", "10")][2] == "-0.9063"
        assert rows[("2", "0.1")][3] == "-0.123866"

    def test_out_file(self, tmp_path, capsys):
        dest = tmp_path / "t.csv"
        code, out, _ = run(capsys, "tables", "--betas", "0.5",
                           "--v0-tildes", "0.5", "--out", str(dest))
        assert code == 0
        assert dest.read_text().startswith("beta,v0_tilde,")

    def test_digits_override(self, capsys):
        _, out, _ = run(capsys, "tables", "--betas", "0.5", "--v0-tildes", "2",
                        "--digits", "3")
        cells = out.strip().split("\n")[1].split(",")
        assert cells[2] == "-0.645"


class TestShock:
    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "shock", "--model", '{"kind":"ogden","lambda":1.0}',
                           "--v0", str(math.sqrt(2.0)))
        assert code == 0
        obj = json.loads(out)
        assert obj["gamma_l"] == pytest.approx(-0.6446, abs=1e-4)

    def test_linear_closed_form(self, capsys):
        code, out, _ = run(capsys, "shock", "--model",
                           '{"kind":"linear","lambda":0.5,"mu":0.25}', "--v0", "0.5")
        obj = json.loads(out)
        assert obj["gamma_l"] == pytest.approx(-0.5, abs=1e-10)
        assert obj["sigma"] == pytest.approx(1.0, abs=1e-10)

    def test_csv_format(self, capsys):
        code, out, _ = run(capsys, "shock", "--model", '{"kind":"ogden","lambda":1.0}',
                           "--v0", "1.0", "--format", "csv")
        assert code == 0
        assert out.startswith("v0,gamma_l,sigma,residual\n")

    def test_model_file(self, tmp_path, capsys):
        f = tmp_path / "m.json"
        f.write_text('{"kind": "ogden", "lambda": 1.0}')
        code, out, _ = run(capsys, "shock", "--model", str(f), "--v0", "1.0")
        assert code == 0

    def test_numerical_error_exit_code(self, capsys):
        code, _, err = run(capsys, "shock", "--model", '{"kind":"stvk"}', "--v0", "10")
        assert code == 3
        assert "numerical error" in err


class TestValidationErrors:
    def test_malformed_json(self, capsys):
        code, _, err = run(capsys, "shock", "--model", "{not json", "--v0", "1.0")
        assert code == 2
        assert "JSON" in err

    def test_unknown_kind(self, capsys):
        code, _, err = run(capsys, "shock", "--model", '{"kind":"bogus"}', "--v0", "1.0")
        assert code == 2
        assert "kind" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "shock", "--model", "/nonexistent/m.json", "--v0", "1.0")
        assert code == 2

    def test_bad_gamma(self, capsys):
        code, _, _ = run(capsys, "entropy", "--model", '{"kind":"ogden"}',
                         "--gamma-l", "0.5")
        assert code == 2


class TestAnalyze:
    def test_stvk_threshold_in_report(self, capsys):
        code, out, _ = run(capsys, "analyze", "--model", '{"kind":"stvk"}',
                           "--range", "-0.99", "2")
        assert code == 0
        obj = json.loads(out)
        assert set(obj) == {"hyperbolic", "gnl", "thresholds"}
        assert obj["thresholds"]["hyperbolic_onset"] == pytest.approx(-0.4226497, abs=1e-6)


class TestEntropy:
    def test_ogden_holds(self, capsys):
        code, out, _ = run(capsys, "entropy", "--model", '{"kind":"ogden","lambda":1.0}',
                           "--gamma-l", "-0.5")
        assert code == 0
        assert json.loads(out)["holds"] is True


class TestSimulate:
    def test_end_to_end(self, tmp_path, capsys):
        cfg = tmp_path / "run.json"
        cfg.write_text(json.dumps({
            "model": {"kind": "ogden", "lambda": 1.0},
            "v0": 1.0, "cells": 200, "t_end": 0.1,
        }))
        field_csv = tmp_path / "field.csv"
        code, out, _ = run(capsys, "simulate", "--config", str(cfg), "--out", str(field_csv))
        assert code == 0
        assert field_csv.read_text().startswith("x,V,Gamma")
        summary = json.loads(out)
        assert {"sigma_est", "gamma_left_est", "sigma_rh", "gamma_l_rh"} <= set(summary)
        assert summary["sigma_est"] == pytest.approx(summary["sigma_rh"], rel=0.05)

    def test_missing_model_field(self, tmp_path, capsys):
        cfg = tmp_path / "bad.json"
        cfg.write_text("{}")
        code, _, err = run(capsys, "simulate", "--config", str(cfg))
        assert code == 2
        assert "model" in err
