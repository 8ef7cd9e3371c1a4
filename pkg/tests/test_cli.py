import json
import subprocess
import sys

import pytest

from fockbound.cli import main


def test_list_claims(capsys):
    assert main(["list-claims"]) == 0
    out = capsys.readouterr().out
    assert "omega-translation-bound" in out and "‖g·ω(z)−ω(gz)‖₁ ≤ |z|₀|g|_Γ" in out
    assert "q-commutation" in out


def test_verify_small_run(tmp_path, capsys):
    out = tmp_path / "rep"
    code = main(["verify", "--suite", "sym", "--samples", "20", "--shell-max", "2", "--truncation", "2",
                 "--out", str(out), "--quiet"])
    assert code == 0
    summary = json.loads((out / "summary.json").read_text())
    assert summary["variants"] == ["sym"] and summary["samples"] == 20
    assert "pass:" in capsys.readouterr().out


def test_verify_single_claim(tmp_path):
    out = tmp_path / "rep"
    assert main(["verify", "--claim", "omega-norm-identity", "--samples", "10", "--out", str(out), "--quiet"]) == 0
    claims = json.loads((out / "summary.json").read_text())["claims"]
    assert {c["claim"] for c in claims} == {"omega-norm-identity"}


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--truncation", "0"],
        ["verify", "--samples", "-3"],
        ["verify", "--config", "missing_config"],
        ["verify", "--claim", "no-such-claim"],
        ["export-operator", "--label", "0/1", "--variant", "sym", "--truncation", "0"],
        ["export-operator", "--label", "0/1:2", "--variant", "anti", "--truncation", "3"],
        ["export-operator", "--label", "", "--variant", "full", "--truncation", "3"],
    ],
)
def test_invalid_input_exit_code(argv, tmp_path, capsys):
    assert main(argv + (["--out", str(tmp_path)] if argv[0] == "verify" else [])) == 2
    assert "fockbound: error:" in capsys.readouterr().err


def test_resource_limit_exit_code(tmp_path, capsys):
    code = main(["verify", "--claim", "shell-cover", "--suite", "full", "--shell-max", "6", "--shell-budget", "100",
                 "--out", str(tmp_path)])
    assert code == 3
    assert "feasible limit" in capsys.readouterr().err


def test_environment_and_config_precedence(tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("group = free-abelian 1\nsuite.seed = 5\n")
    env = {"FOCKBOUND_SEED": "9", "FOCKBOUND_SAMPLES": "11", "FOCKBOUND_VARIANTS": "anti", "PATH": ""}
    out = tmp_path / "rep"
    cmd = [sys.executable, "-m", "fockbound.cli", "verify", "--config", str(cfg), "--claim", "mu-probability",
           "--shell-max", "2", "--out", str(out), "--quiet"]
    proc = subprocess.run(cmd, env=env, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    summary = json.loads((out / "summary.json").read_text())
    assert (summary["seed"], summary["samples"], summary["variants"]) == (5, 11, ["anti"])
    proc = subprocess.run(cmd + ["--seed", "2"], env=env, capture_output=True, text=True)
    assert json.loads((out / "summary.json").read_text())["seed"] == 2


def test_help_mentions_environment(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "--help"])
    assert "FOCKBOUND_SEED" in capsys.readouterr().out
