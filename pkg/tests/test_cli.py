import csv
import json
import math

import numpy as np
import pytest

from covosc import cli, selftest


def _run(tmp_path, *args, name="out"):
    path = tmp_path / name
    code = cli.run(list(args) + ["--output", str(path)])
    return code, path


def _csv_rows(path):
    lines = path.read_text().splitlines()
    assert lines[0].startswith("# covosc ")
    return list(csv.reader(lines[1:]))


def test_entropy_scan_includes_origin(tmp_path):
    code, path = _run(tmp_path, "entropy-scan", "--eta-max", "2", "--steps", "5")
    assert code == 0
    rows = _csv_rows(path)
    assert rows[0] == ["eta", "entropy", "entropy_series"]
    assert [float(v) for v in rows[1][:2]] == [0.0, 0.0]
    assert len(rows) == 6


def test_entropy_scan_thermal_table(tmp_path):
    code, path = _run(tmp_path, "entropy-scan", "--table", "thermal", "--x-min", "0.5", "--x-max", "2",
                      "--steps", "4")
    assert code == 0
    rows = _csv_rows(path)
    assert rows[0][0] == "x"
    assert float(rows[1][0]) == 0.5


def test_overlap_table(tmp_path):
    code, path = _run(tmp_path, "overlap-table", "--beta", "0.6", "--nmax", "3")
    assert code == 0
    rows = _csv_rows(path)
    assert rows[0] == ["n\\m", "0", "1", "2", "3"]
    m = np.array([[float(v) for v in r[1:]] for r in rows[1:]])
    # verified contraction for unit-normalized states: 0.8^(n+1)
    assert np.allclose(np.diag(m), [0.8, 0.64, 0.512, 0.4096], atol=1e-12)
    assert np.max(np.abs(m - np.diag(np.diag(m)))) < 1e-12


def test_parton_ratio(tmp_path):
    code, path = _run(tmp_path, "parton-ratio", "--energy", "900", "--mass", "0.938272", "--format", "json")
    assert code == 0
    data = json.loads(path.read_text())
    r = data["result"]["ratio"]
    assert 1e-7 <= r <= 1e-6
    assert data["config"]["energy"] == 900


def test_wavefunction_grid_layout(tmp_path):
    code, path = _run(tmp_path, "wavefunction", "--n", "1", "--eta", "0.5", "--extent", "2", "--points", "5")
    assert code == 0
    rows = _csv_rows(path)
    assert rows[0][0] == "z\\t"
    t_axis = [float(v) for v in rows[0][1:]]
    assert t_axis == [-2.0, -1.0, 0.0, 1.0, 2.0]
    z_axis = [float(r[0]) for r in rows[1:]]
    assert z_axis == t_axis
    from covosc.covariant import boosted_wavefunction
    assert float(rows[2][4]) == boosted_wavefunction(1, 0.5, -1.0, 1.0)


def test_momentum_json_grid(tmp_path):
    code, path = _run(tmp_path, "momentum", "--eta", "0.3", "--points", "3", "--extent", "1", "--format", "json")
    assert code == 0
    data = json.loads(path.read_text())
    assert (data["row_label"], data["col_label"]) == ("q_z", "q_0")
    assert np.array(data["values"]).shape == (3, 3)


def test_numbers_round_trip(tmp_path):
    code, path = _run(tmp_path, "schmidt", "--eta", "0.7", "--kmax", "4")
    assert code == 0
    rows = _csv_rows(path)
    c1 = float(rows[2][1])
    assert c1 == math.tanh(0.7) / math.cosh(0.7)


@pytest.mark.parametrize("args", [
    ["diagonalize", "--A", "5", "--C", "3"],
    ["schmidt", "--eta", "1.1"],
    ["verify-expansion", "--eta", "0.5", "--kmax", "6"],
    ["reduce", "--eta", "0.5", "--points", "41"],
    ["purity-scan", "--steps", "7"],
    ["entropy-scan", "--steps", "7", "--format", "json"],
    ["overlap-table", "--eta", "0.4", "--nmax", "4"],
    ["momentum", "--eta", "1.0"],
    ["wavefunction", "--n", "2", "--eta", "0.9"],
    ["parton-ratio"],
])
def test_deterministic_output(tmp_path, args):
    c1, p1 = _run(tmp_path, *args, name="a")
    c2, p2 = _run(tmp_path, *args, name="b")
    assert c1 == c2 == 0
    assert p1.read_bytes() == p2.read_bytes()


def test_config_file_and_override(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"eta": 0.5, "kmax": 3}))
    code, path = _run(tmp_path, "schmidt", "--config", str(cfg))
    assert code == 0
    assert len(_csv_rows(path)) == 5
    code, path = _run(tmp_path, "schmidt", "--config", str(cfg), "--kmax", "6", name="b")
    assert len(_csv_rows(path)) == 8
    assert "eta=0.5" in path.read_text().splitlines()[0]


def test_config_unknown_key_is_usage_error(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"nonsense": 1}))
    code, _ = _run(tmp_path, "schmidt", "--config", str(cfg))
    assert code == cli.EXIT_USAGE


@pytest.mark.parametrize("args", [
    ["no-such-command"],
    ["diagonalize", "--A", "1", "--C", "2"],
    ["schmidt", "--kmax", "-1"],
    ["overlap-table", "--beta", "1.5"],
    ["parton-ratio", "--energy", "0.1"],
    ["verify-expansion", "--kmax", "10", "--order", "20"],
])
def test_usage_errors(tmp_path, args):
    code, _ = _run(tmp_path, *args)
    assert code == cli.EXIT_USAGE


def test_precondition_violation_exit_code(tmp_path):
    code, _ = _run(tmp_path, "reduce", "--eta", "2.0", "--extent", "3", "--points", "21")
    assert code == cli.EXIT_PRECONDITION


def test_selftest_passes(tmp_path):
    code, path = _run(tmp_path, "selftest", "--format", "json")
    assert code == 0
    data = json.loads(path.read_text())
    assert all(row[3] for row in data["rows"])


def test_selftest_failure_exit_code(tmp_path, monkeypatch):
    def failing():
        return [{"name": "forced", "value": 1.0, "tolerance": 0.5, "passed": False}]

    monkeypatch.setattr(selftest, "SUITES", selftest.SUITES + (failing,))
    code, _ = _run(tmp_path, "selftest")
    assert code == cli.EXIT_SELFTEST


def test_stdout_default(capsys):
    assert cli.run(["purity-scan", "--steps", "3"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[1] == "eta,purity,purity_series"
    assert out[2].startswith("0,1,")
