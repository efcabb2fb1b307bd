"""CLI surface tests (exit codes, output shape)."""

import json

import pytest

from algwatchdog.cli import main


def write_config(tmp_path, **kw):
    cfg = dict(n=8, h=3, d=3, p12=0.1, p21=0.1, p31=0.1, p32=0.1,
               epsilon=0.01, adversary="random_nonzero_error", engine="algebraic",
               trials=100, seed=1)
    cfg.update(kw)
    path = tmp_path / "config.json"
    path.write_text(json.dumps(cfg))
    return str(path)


class TestPredict:
    def test_prints_all_figures(self, capsys):
        rc = main(["predict", "--n", "8", "--h", "3", "--r12", "3", "--r21", "3", "--r31", "3", "--r32", "3"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "misdetection_v1" in out and "misdetection_v2" in out and "beta_bound" in out
        assert "0.0239717" in out

    def test_no_overhear_flag(self, capsys):
        rc = main(["predict", "--n", "8", "--h", "4", "--r12", "8", "--r21", "8", "--r31", "2", "--r32", "2", "--no-overhear"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "beta_no_overhear" in out
        assert "0.0090332" in out

    def test_invalid_params_exit_2(self, capsys):
        assert main(["predict", "--n", "8", "--h", "3", "--r12", "9", "--r21", "3", "--r31", "3", "--r32", "3"]) == 2


class TestSimulate:
    def test_writes_json_report(self, tmp_path, capsys):
        cfg = write_config(tmp_path, trials=50)
        out = tmp_path / "rep.json"
        assert main(["simulate", "--config", cfg, "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["config"]["trials"] == 50

    def test_stdout_when_no_out(self, tmp_path, capsys):
        cfg = write_config(tmp_path, trials=20)
        assert main(["simulate", "--config", cfg]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["gamma"]["trials"] == 20

    def test_seed_and_trials_overrides(self, tmp_path, capsys):
        cfg = write_config(tmp_path, trials=50)
        assert main(["simulate", "--config", cfg, "--seed", "9", "--trials", "10"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["config"]["seed"] == 9 and doc["config"]["trials"] == 10

    def test_invalid_config_exit_2(self, tmp_path, capsys):
        cfg = write_config(tmp_path, n=99)
        assert main(["simulate", "--config", cfg]) == 2

    def test_unknown_field_exit_2(self, tmp_path, capsys):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"n": 8, "bogus": 1}))
        assert main(["simulate", "--config", str(path)]) == 2

    def test_unwritable_out_exit_3(self, tmp_path, capsys):
        cfg = write_config(tmp_path, trials=5)
        assert main(["simulate", "--config", cfg, "--out", "/nonexistent-dir/x.json"]) == 3


class TestSweep:
    def test_csv_sweep(self, tmp_path):
        cfg = write_config(tmp_path, trials=20)
        out = tmp_path / "sweep.csv"
        assert main(["sweep", "--config", cfg, "--axis", "h", "--values", "2,3", "--out", str(out), "--format", "csv"]) == 0
        lines = out.read_text().strip().splitlines()
        assert len(lines) == 3

    def test_bad_axis_exit_2(self, tmp_path, capsys):
        cfg = write_config(tmp_path, trials=20)
        assert main(["sweep", "--config", cfg, "--axis", "nope", "--values", "1,2"]) == 2


def test_selftest_passes(capsys):
    assert main(["selftest"]) == 0
    out = capsys.readouterr().out
    assert out.count(": ok") == 3
