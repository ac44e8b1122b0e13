"""End-to-end command-line runs: outputs, determinism, exit codes."""

import json
import math
import subprocess
import sys

import pytest

BASE = {
    "params": {"hbar": 1.0, "m": 1.0, "g": 1.0, "c": 10.0},
    "grid": {"x_min": -20.0, "x_max": 20.0, "n": 256},
    "initial": {"x0": 0.0, "p0": 0.0, "sigma0": 1.0},
}


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "wavefall", *args],
        capture_output=True,
        text=True,
    )


def write_cfg(path, extra):
    cfg = dict(BASE)
    cfg.update(extra)
    path.write_text(json.dumps(cfg))
    return str(path)


def test_evolve_writes_expected_columns_and_values(tmp_path):
    cfg = write_cfg(
        tmp_path / "c.json",
        {"evolve": {"t_values": [0.5, 1.0], "n_steps": 512}},
    )
    out = tmp_path / "out.csv"
    res = run_cli("evolve", "--config", cfg, "--out", str(out))
    assert res.returncode == 0
    raw = out.read_bytes()
    assert b"\r" not in raw  # LF endings only
    lines = raw.decode().strip().split("\n")
    assert lines[0] == (
        "t,mean_x_exact,mean_p_exact,sigma_x_exact,"
        "mean_x_numeric,sigma_x_numeric,norm_error"
    )
    assert len(lines) == 3
    row = lines[2].split(",")
    assert float(row[0]) == 1.0
    assert float(row[1]) == pytest.approx(-0.5, abs=1e-9)
    assert float(row[2]) == pytest.approx(-1.0, abs=1e-9)
    assert float(row[3]) == pytest.approx(math.sqrt(5.0) / 2.0, abs=1e-9)
    assert float(row[4]) == pytest.approx(-0.5, abs=1e-8)
    assert float(row[6]) < 1e-10  # both backends stay normalized


def test_evolve_is_byte_identical_between_runs(tmp_path):
    cfg = write_cfg(
        tmp_path / "c.json",
        {"evolve": {"t_values": [0.25, 0.5, 0.75], "n_steps": 256}},
    )
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run_cli("evolve", "--config", cfg, "--out", str(a)).returncode == 0
    assert run_cli("evolve", "--config", cfg, "--out", str(b)).returncode == 0
    assert a.read_bytes() == b.read_bytes()


def test_interfere_writes_records_and_is_deterministic(tmp_path):
    cfg = write_cfg(
        tmp_path / "c.json",
        {"interfere": {"t_values": [0.5, 1.0]}},
    )
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    res = run_cli("interfere", "--config", cfg, "--out", str(a))
    assert res.returncode == 0
    assert run_cli("interfere", "--config", cfg, "--out", str(b)).returncode == 0
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().strip().split("\n")
    assert lines[0] == (
        "t,re_overlap,im_overlap,visibility,phase,phase_unwrapped,"
        "predicted_phase,predicted_visibility"
    )
    row = lines[2].split(",")
    assert float(row[4]) == pytest.approx(1.0 / 3.0, abs=1e-8)
    assert float(row[3]) == pytest.approx(math.exp(-0.625), abs=1e-8)


def test_csv_number_formatting():
    # 17 significant digits round-trip doubles exactly; None becomes blank
    from wavefall.cli import _fmt

    assert _fmt(None) == ""
    assert _fmt(0.1) == "0.10000000000000001"
    assert float(_fmt(1.0 / 3.0)) == 1.0 / 3.0


def test_verify_passes_on_defaults_and_prints_one_line_per_check(tmp_path):
    out = tmp_path / "summary.json"
    res = run_cli("verify", "--out", str(out))
    assert res.returncode == 0
    lines = [l for l in res.stdout.strip().split("\n") if l]
    from wavefall import CHECK_NAMES

    pass_lines = [l for l in lines if l.startswith("PASS ")]
    assert len(pass_lines) == len(CHECK_NAMES)
    for name in CHECK_NAMES:
        assert any(name in l for l in pass_lines)
    summary = json.loads(out.read_text())
    assert summary["all_pass"] is True
    assert len(summary["checks"]) == len(CHECK_NAMES)


def test_verify_fails_honestly_on_an_unusable_grid(tmp_path):
    # sigma0 = 1 cannot be resolved on an n = 8 lattice; the affected checks
    # report structured failures and the command exits 1
    cfg = write_cfg(
        tmp_path / "c.json",
        {
            "grid": {"x_min": -20.0, "x_max": 20.0, "n": 8},
            "verify": {"n_oracle": 8, "n_random": 10},
        },
    )
    res = run_cli("verify", "--config", cfg)
    assert res.returncode == 1
    assert "FAIL" in res.stdout


def test_missing_required_key_names_the_path(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({
        "params": BASE["params"],
        "grid": {"x_min": -20.0, "x_max": 20.0},
        "initial": BASE["initial"],
    }))
    res = run_cli("verify", "--config", str(cfg))
    assert res.returncode == 2
    assert "grid.n" in res.stderr


def test_unknown_key_rejected(tmp_path):
    cfg = dict(BASE)
    cfg["grid"] = {"x_min": -20.0, "x_max": 20.0, "n": 256, "spacing": 0.1}
    p = tmp_path / "c.json"
    p.write_text(json.dumps(cfg))
    res = run_cli("verify", "--config", str(p))
    assert res.returncode == 2
    assert "grid.spacing" in res.stderr


def test_invalid_json_exits_2(tmp_path):
    p = tmp_path / "c.json"
    p.write_text("{not json")
    res = run_cli("verify", "--config", str(p))
    assert res.returncode == 2


def test_missing_config_file_exits_2(tmp_path):
    res = run_cli("verify", "--config", str(tmp_path / "absent.json"))
    assert res.returncode == 2


def test_evolve_without_evolve_block_exits_2(tmp_path):
    cfg = write_cfg(tmp_path / "c.json", {})
    res = run_cli("evolve", "--config", cfg, "--out", str(tmp_path / "o.csv"))
    assert res.returncode == 2


def test_unwritable_out_path_exits_2(tmp_path):
    cfg = write_cfg(
        tmp_path / "c.json",
        {"evolve": {"t_values": [0.5], "n_steps": 64}},
    )
    out = tmp_path / "no_such_dir" / "o.csv"
    res = run_cli("evolve", "--config", cfg, "--out", str(out))
    assert res.returncode == 2
    assert "output error" in res.stderr
    assert "Traceback" not in res.stderr


def test_grid_overflow_exits_3(tmp_path):
    cfg = write_cfg(
        tmp_path / "c.json",
        {"evolve": {"t_values": [0.5, 8.0], "n_steps": 64}},
    )
    res = run_cli("evolve", "--config", cfg, "--out", str(tmp_path / "o.csv"))
    assert res.returncode == 3
    assert "grid overflow" in res.stderr


def test_phase_aliasing_exits_4_with_denser_suggestion(tmp_path):
    t2 = (1.0 + 3.0 * math.pi) ** (1.0 / 3.0)
    cfg = write_cfg(
        tmp_path / "c.json",
        {"interfere": {"t_values": [1.0, t2]}},
    )
    res = run_cli("interfere", "--config", cfg, "--out", str(tmp_path / "o.csv"))
    assert res.returncode == 4
    assert "denser" in res.stderr
    # the suggestion inserts the midpoint between the two readout times
    assert f"{0.5 * (1.0 + t2):.6f}"[:6] in res.stderr


def test_verify_summary_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run_cli("verify", "--out", str(a), "--seed", "7").returncode == 0
    assert run_cli("verify", "--out", str(b), "--seed", "7").returncode == 0
    assert a.read_bytes() == b.read_bytes()
