"""CLI surface: subcommands, formats, determinism, exit codes."""
import json
import os

import pytest

from bpfloer.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_groups_listing(capsys):
    code, out = run_cli(capsys, "groups")
    assert code == 0 and "T*" in out and "order" in out


def test_repr_table_text_and_json(capsys):
    code, out = run_cli(capsys, "repr", "table", "T*")
    assert code == 0 and "rho4" in out and "H" in out
    code, out = run_cli(capsys, "repr", "table", "T*", "--format", "json")
    doc = json.loads(out)
    assert doc["schema_version"] == 1
    assert doc["order"] == 24
    assert len(doc["characters"]) == 7


def test_mckay_and_sgraph(capsys):
    code, out = run_cli(capsys, "mckay", "graph", "O*")
    assert code == 0 and "E~7" in out
    code, out = run_cli(capsys, "sgraph", "I*", "--dot")
    assert code == 0 and '"(3|4)"' in out
    code, out = run_cli(capsys, "sgraph", "D*_6", "--json")
    doc = json.loads(out)
    labels = {(e["a"], e["b"]): e["label"] for e in doc["edges"]}
    assert labels[("alpha1", "alpha2")] == "(2|2)"


def test_dci_window(capsys):
    code, out = run_cli(capsys, "dci", "T*", "--window=-1:8", "--degrees=0:11")
    assert code == 0 and "(0, 0): 2" in out
    code, out = run_cli(capsys, "dci", "T*", "--window=-1:8", "--degrees=0:11",
                        "--format", "json")
    doc = json.loads(out)
    assert doc["group"] == "T*"
    assert any(d["coeff"] == 3 for d in doc["differentials"])


def test_dci_empty_window_json(capsys):
    code, out = run_cli(capsys, "dci", "T*", "--window=0:1", "--degrees=0:0",
                        "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["generators"] == []


def test_floer_command(capsys):
    code, out = run_cli(capsys, "floer", "O*", "--flavor", "-")
    assert code == 0
    assert "degeneration page: 5" in out and "PASS" in out
    code, out = run_cli(capsys, "floer", "T*", "--flavor", "+", "--coeff", "fp:5")
    assert code == 0 and "PASS" in out


def test_floer_raw(capsys):
    code, out = run_cli(capsys, "floer-raw", "T*", "--flavor", "-",
                        "--window=-8:8", "--degrees=-8:8", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["homology_dims"]


def test_cs_command(capsys):
    code, out = run_cli(capsys, "cs", "T*", "--format", "json")
    doc = json.loads(out)
    vals = {row["name"]: row["cs"] for row in doc["flat_connections"]}
    assert vals == {"theta": "0", "alpha": "23/24", "lambda": "1/3"}


def test_json_determinism(capsys):
    _, out1 = run_cli(capsys, "sgraph", "O*", "--json")
    _, out2 = run_cli(capsys, "sgraph", "O*", "--json")
    assert out1 == out2
    _, out3 = run_cli(capsys, "floer-raw", "C_4", "--window=-6:6", "--degrees=-6:6",
                      "--format", "json")
    _, out4 = run_cli(capsys, "floer-raw", "C_4", "--window=-6:6", "--degrees=-6:6",
                      "--format", "json")
    assert out3 == out4


def test_usage_errors():
    assert main(["repr"]) == 2  # missing arguments
    assert main(["nonsense"]) == 2


def test_even_prime_rejected_before_compute(capsys):
    code = main(["floer", "T*", "--coeff", "fp:2"])
    assert code == 2


def test_bad_group_is_an_error(capsys):
    code = main(["sgraph", "X17"])
    assert code == 1


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "bp.cfg"
    cfg.write_text("format = json\norientation = std\n")
    code, out = run_cli(capsys, "--config", str(cfg), "cs", "T*")
    doc = json.loads(out)
    assert doc["orientation"] == "std"
    # flags override the config
    code, out = run_cli(capsys, "--config", str(cfg), "cs", "T*", "--format", "text")
    assert "flat connections" in out


def test_verify_quick_subset(capsys):
    code, out = run_cli(capsys, "verify", "--groups", "C_3,D*_2", "--quick")
    assert code == 0
    assert "verify: PASS" in out


def test_verify_json_round_trip(capsys):
    code, out = run_cli(capsys, "verify", "--groups", "C_3", "--quick",
                        "--format", "json")
    doc = json.loads(out)
    assert doc["all_pass"] is True
    assert all(c["status"] == "PASS" for c in doc["checks"])


def test_verify_jobs_merge_order_independent(capsys):
    _, seq = run_cli(capsys, "verify", "--groups", "C_3,C_4", "--quick")
    _, par = run_cli(capsys, "verify", "--groups", "C_3,C_4", "--quick", "--jobs", "2")
    strip = lambda s: [l for l in s.splitlines() if not l.startswith("verify:")]
    assert strip(seq) == strip(par)


def test_env_var_config(tmp_path, capsys, monkeypatch):
    cfg = tmp_path / "env.cfg"
    cfg.write_text("format = json\n")
    monkeypatch.setenv("BPFLOER_CONFIG", str(cfg))
    code, out = run_cli(capsys, "cs", "O*")
    doc = json.loads(out)
    assert code == 0 and doc["group"] == "O*"


def test_even_prime_in_config_rejected(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("coeff = fp:2\n")
    code = main(["--config", str(cfg), "floer", "T*"])
    assert code == 2


def test_report_carries_tool_version(capsys):
    code, out = run_cli(capsys, "verify", "--groups", "C_3", "--quick",
                        "--format", "json")
    doc = json.loads(out)
    assert doc["tool_version"]
    assert "wall_time_s" in doc and doc["config"]["groups"] == "C_3"
