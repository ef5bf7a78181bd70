import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from wreathfock.cli import main

ROOT = Path(__file__).resolve().parent.parent
SCENARIOS = ROOT / "demos" / "scenarios"


def run_cli(*args, env=None):
    """Run the CLI in a fresh interpreter; returns (exit code, stdout, stderr)."""
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    proc = subprocess.run([sys.executable, "-m", "wreathfock", *args],
                          capture_output=True, text=True, env=full_env,
                          cwd=ROOT)
    return proc.returncode, proc.stdout, proc.stderr


# ---------------------------------------------------------------------------
# in-process command behaviour


def test_group_info_table(capsys):
    assert main(["group", "info", "S3"]) == 0
    out = capsys.readouterr().out
    assert "order 6" in out and "3 conjugacy classes" in out


def test_group_classes_json(capsys):
    assert main(["group", "classes", "S3", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert [c["size"] for c in doc["classes"]] == [1, 3, 2]
    assert doc["order"] == 6


def test_wreath_classes_json(capsys):
    assert main(["wreath", "classes", "C2", "3", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["order"] == 48 and doc["num_classes"] == 10
    assert sum(c["size"] for c in doc["classes"]) == 48


def test_wreath_centralizer(capsys):
    assert main(["wreath", "centralizer", "C4", "5",
                 "--type", "[[2,2,1],[3,3,1]]", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["centralizer_order"] == 96


def test_wreath_centralizer_rejects_wrong_level(capsys):
    assert main(["wreath", "centralizer", "C4", "4",
                 "--type", "[[2,2,1],[3,3,1]]"]) == 2


def test_pullback_build_defaults_to_trivial_k(capsys):
    assert main(["pullback", "build", "--K", "trivial",
                 "--G", "C2", "--H", "C3", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["order"] == 6 and doc["num_classes"] == 6


def test_pullback_requires_groups(capsys):
    assert main(["pullback", "build", "--G", "C2"]) == 2


def test_pullback_check_closed_scenario(capsys):
    assert main(["pullback", "check-closed",
                 "--scenario", str(SCENARIOS / "s3xs3.json"),
                 "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["conj_closed"] is False
    assert doc["witness"] is not None
    assert doc["fusion_pattern"]["splitting"] == 1


def test_pullback_verify_iso_scenario(capsys):
    assert main(["pullback", "verify-iso",
                 "--scenario", str(SCENARIOS / "d12_dic3.json"),
                 "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["order"] == 24 and doc["is_isomorphism"] is True


def test_fock_basis(capsys):
    assert main(["fock", "basis", "C2", "--level", "3",
                 "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["dimension"] == 10 and doc["invertible"] is True
    assert doc["determinant"] == "144/1"


def test_fock_basis_respects_level_cap(capsys):
    assert main(["fock", "basis", "C2", "--level", "9"]) == 2


def test_fock_product(capsys):
    assert main(["fock", "product", "C2",
                 "--monomial", "[[1,0,1],[1,1,1]]", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["values"] == ["1/1", "0/1", "0/1", "0/1", "0/1"]


def test_fock_kunneth(capsys):
    assert main(["fock", "kunneth", "C2", "C3", "--max-level", "2",
                 "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["all_equal"] is True and doc["checks"] == 12


def test_fock_series(capsys):
    assert main(["fock", "series", "S3", "--max", "6",
                 "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["counts"] == doc["series"] == [1, 3, 9, 22, 51, 108, 221]
    assert doc["agree"] is True


def test_golden_all_pass(capsys):
    assert main(["golden"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out
    assert out.count("PASS") == 8


def test_golden_json(capsys):
    assert main(["golden", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert all(entry["passed"] for entry in doc)


def test_unknown_group_is_a_usage_error(capsys):
    assert main(["group", "info", "NoSuchGroup"]) == 2


def test_group_file_ingestion(tmp_path, capsys):
    p = tmp_path / "k4.json"
    p.write_text(json.dumps({"name": "K4", "degree": 4,
                             "generators": [[1, 0, 3, 2], [2, 3, 0, 1]]}))
    assert main(["group", "info", str(p), "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["order"] == 4 and doc["num_classes"] == 4


def test_group_classes_from_file_flag(tmp_path, capsys):
    p = tmp_path / "d12.json"
    p.write_text(json.dumps({"name": "D12", "degree": 6,
                             "generators": [[1, 2, 3, 4, 5, 0],
                                            [0, 5, 4, 3, 2, 1]]}))
    assert main(["group", "classes", "--file", str(p),
                 "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["classes"]) == 6


def test_group_needs_exactly_one_source(capsys, tmp_path):
    assert main(["group", "info"]) == 2
    p = tmp_path / "d12.json"
    p.write_text(json.dumps({"name": "D12", "degree": 6,
                             "generators": [[1, 2, 3, 4, 5, 0],
                                            [0, 5, 4, 3, 2, 1]]}))
    assert main(["group", "info", "S3", "--file", str(p)]) == 2


# ---------------------------------------------------------------------------
# whole-process behaviour: exit codes, determinism, env vars


def test_usage_error_exit_code():
    code, _, err = run_cli("bogus-command")
    assert code == 2
    code, _, _ = run_cli()
    assert code == 2


def test_resource_cap_exit_code(tmp_path):
    p = tmp_path / "s5.json"
    p.write_text(json.dumps({"name": "S5", "degree": 5,
                             "generators": [[1, 0, 2, 3, 4],
                                            [1, 2, 3, 4, 0]]}))
    code, _, err = run_cli("group", "info", str(p), "--max-order", "50")
    assert code == 3 and "cap" in err


def test_env_var_caps_construction(tmp_path):
    p = tmp_path / "s5.json"
    p.write_text(json.dumps({"name": "S5", "degree": 5,
                             "generators": [[1, 0, 2, 3, 4],
                                            [1, 2, 3, 4, 0]]}))
    code, _, _ = run_cli("group", "info", str(p),
                         env={"WREATHFOCK_MAX_ORDER": "50"})
    assert code == 3
    code, _, _ = run_cli("group", "info", str(p),
                         env={"WREATHFOCK_MAX_ORDER": "500"})
    assert code == 0


def test_json_output_is_byte_identical():
    runs = [run_cli("wreath", "classes", "S3", "3", "--format", "json")
            for _ in range(2)]
    assert runs[0][0] == runs[1][0] == 0
    assert runs[0][1] == runs[1][1]


def test_series_success_path():
    code, out, _ = run_cli("fock", "series", "C2", "--max", "4",
                           "--format", "json")
    assert code == 0
    assert json.loads(out)["counts"] == [1, 2, 5, 10, 20]
