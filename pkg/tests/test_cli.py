import csv
import json

import numpy as np
import pytest
from numpy.testing import assert_allclose

from discord_lab.cli import main
from discord_lab.dynamics import TWO_SIDED, propagate
from discord_lab.measures import geometric_discord_closed
from discord_lab.states import random_density_matrix, rho_zero, state_from_dict, write_state


@pytest.fixture
def state_file(tmp_path):
    path = tmp_path / "state.json"
    write_state(path, rho_zero())
    return str(path)


def parse_kv(text):
    out = {}
    for line in text.strip().splitlines():
        key, value = line.split("=")
        out[key] = float(value)
    return out


def test_validate_ok(state_file, capsys):
    assert main(["validate", state_file]) == 0
    assert capsys.readouterr().out.strip() == "valid"


def test_validate_missing_file(tmp_path, capsys):
    assert main(["validate", str(tmp_path / "nope.json")]) == 1
    assert "i/o error" in capsys.readouterr().err


def test_validate_rejects_invalid_state(tmp_path, capsys):
    bad = np.diag([0.7, 0.4, 0.0, -0.1]).astype(complex)
    path = tmp_path / "bad.json"
    write_state(path, bad)
    assert main(["validate", str(path)]) == 2
    assert "positive" in capsys.readouterr().err


def test_validate_rejects_malformed_json(tmp_path, capsys):
    path = tmp_path / "garbled.json"
    path.write_text("{not json")
    assert main(["validate", str(path)]) == 2


def test_tol_env_override(tmp_path, monkeypatch, capsys):
    slightly_negative = np.diag([0.5, 0.5 + 1e-7, 0.0, -1e-7]).astype(complex)
    path = tmp_path / "edge.json"
    write_state(path, slightly_negative)
    assert main(["validate", str(path)]) == 2
    capsys.readouterr()
    monkeypatch.setenv("DISCORD_LAB_TOL", "1e-6")
    assert main(["validate", str(path)]) == 0
    monkeypatch.setenv("DISCORD_LAB_TOL", "not-a-number")
    assert main(["validate", str(path)]) == 1


def test_measures_output(state_file, capsys):
    assert main(["measures", state_file]) == 0
    values = parse_kv(capsys.readouterr().out)
    assert_allclose(values["geometric_discord_closed"], 0.0, atol=1e-10)
    assert_allclose(values["geometric_discord_bruteforce"], 0.0, atol=1e-6)
    assert_allclose(values["max_mutual_correlation"], 1.0, atol=1e-9)
    assert_allclose(values["correlation_distance"], 1.0, atol=1e-9)
    assert_allclose(values["negativity"], 0.0, atol=1e-12)
    assert values["trace_distance_discord"] <= 1e-6


def test_evolve_state_output(state_file, tmp_path, capsys):
    out = tmp_path / "evolved.json"
    code = main(
        ["evolve", state_file, "--channel", "two-sided", "--gamma0t", "0.7", "--out", str(out)]
    )
    assert code == 0
    with open(out) as fh:
        rho = state_from_dict(json.load(fh))
    assert_allclose(rho, propagate(rho_zero(), TWO_SIDED, 0.7), atol=1e-15)


def test_evolve_stdout_roundtrip(state_file, capsys):
    assert main(["evolve", state_file, "--gamma0t", "0.3"]) == 0
    doc = json.loads(capsys.readouterr().out)
    rho = state_from_dict(doc)
    assert_allclose(rho, propagate(rho_zero(), TWO_SIDED, 0.3), atol=1e-15)


def test_evolve_trajectory_csv(state_file, tmp_path):
    out = tmp_path / "traj.csv"
    code = main(
        [
            "evolve",
            state_file,
            "--channel",
            "one-sided-a",
            "--gamma0t",
            "2.0",
            "--trajectory",
            "--steps",
            "11",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    with open(out) as fh:
        rows = list(csv.DictReader(fh))
    labels = {r["label"] for r in rows}
    assert labels == {
        "geometric_discord",
        "max_mutual_correlation",
        "negativity",
        "correlation_distance",
    }
    dg = [r for r in rows if r["label"] == "geometric_discord"]
    assert len(dg) == 11
    assert float(dg[0]["value"]) <= 1e-10  # classical at t = 0
    assert float(dg[5]["value"]) > 1e-3  # discord created along the way


def test_evolve_oracle_agrees(state_file, capsys):
    code = main(
        ["evolve", state_file, "--gamma0t", "0.5", "--oracle", "--dt", "1e-3"]
    )
    assert code == 0
    captured = capsys.readouterr()
    assert "max deviation" in captured.err
    rho = state_from_dict(json.loads(captured.out))
    assert np.abs(rho - propagate(rho_zero(), TWO_SIDED, 0.5)).max() <= 1e-9


def test_evolve_gamma0_is_reporting_only(state_file, capsys, tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    assert main(["evolve", state_file, "--gamma0t", "1.0", "--out", str(out1)]) == 0
    assert main(
        ["evolve", state_file, "--gamma0t", "1.0", "--gamma0", "2.5", "--out", str(out2)]
    ) == 0
    assert out1.read_text() == out2.read_text()
    assert "t = 0.4" in capsys.readouterr().err


def test_figure_commands(tmp_path):
    for which in ("1", "2", "3"):
        out = tmp_path / f"fig{which}.csv"
        args = ["figure", which, "--out", str(out), "--steps", "21", "--alphas", "9"]
        assert main(args) == 0
        with open(out) as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["label", "gamma0t", "value"]
        assert len(rows) > 1


def test_sweep_command(tmp_path, capsys):
    out = tmp_path / "sweep.csv"
    code = main(
        [
            "sweep",
            "--family",
            "cc",
            "--n",
            "5",
            "--seed",
            "123",
            "--channel",
            "two-sided",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    assert "sweep summary" in capsys.readouterr().err
    with open(out) as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["seed", "family", "cm0", "peak_dg", "peak_t"]
    assert len(rows) == 6


def test_sweep_requires_seed(tmp_path):
    with pytest.raises(SystemExit):
        main(["sweep", "--family", "cc", "--n", "5", "--out", str(tmp_path / "x.csv")])


def test_dmax_scan_stdout(capsys):
    assert main(["dmax-scan", "--alphas", "5"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "label,gamma0t,value"
    assert len(lines) == 11  # header + dmax and peak-time rows per alpha


def test_verify_typo(capsys):
    assert main(["verify-typo"]) == 0
    out = capsys.readouterr().out
    assert "corrected coherence feed" in out
    assert "sign-flipped coherence feed" in out
    assert "consistent" in out


def test_measures_on_discordant_state(tmp_path, capsys):
    rho = propagate(rho_zero(), TWO_SIDED, np.log(2.0))
    path = tmp_path / "evolved.json"
    write_state(path, rho)
    assert main(["measures", str(path)]) == 0
    values = parse_kv(capsys.readouterr().out)
    assert_allclose(values["geometric_discord_closed"], 0.125, atol=1e-12)
    assert abs(values["geometric_discord_bruteforce"] - 0.125) <= 1e-6
    assert values["trace_distance_discord"] >= np.sqrt(0.125) - 1e-6
    assert_allclose(values["max_mutual_correlation"], 0.5, atol=1e-12)
    assert values["negativity"] <= 1e-12


def test_random_state_measures_consistency(tmp_path, capsys):
    rho = random_density_matrix(31415, rank=3)
    path = tmp_path / "random.json"
    write_state(path, rho)
    assert main(["measures", str(path)]) == 0
    values = parse_kv(capsys.readouterr().out)
    assert abs(values["geometric_discord_closed"] - geometric_discord_closed(rho)) <= 1e-12
    assert (
        abs(values["geometric_discord_bruteforce"] - values["geometric_discord_closed"])
        <= 1e-6
    )
