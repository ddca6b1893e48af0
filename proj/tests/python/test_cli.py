import json
import os
import pathlib
import subprocess

import pytest

CLI = os.environ.get("TRIVSPEC_CLI")
GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "golden"

pytestmark = pytest.mark.skipif(not CLI, reason="TRIVSPEC_CLI not set")


def run(*args):
    p = subprocess.run([CLI, *args], capture_output=True, text=True)
    return p.returncode, p.stdout


def run_json(*args):
    code, out = run(*args)
    doc = json.loads(out)
    assert doc["schema"] == "trivspec/1"
    assert doc["exit_code"] == code
    return code, doc


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_search_golden():
    args = ["--deterministic", "search", "maxdim-trivspec", "--field", "fp:3", "--degree", "1", "--n", "2"]
    code, out = run(*args)
    assert code == 0
    assert json.loads(out)["result"]["max"] == 1
    golden = GOLDEN / "cli_search_fp3_n2.json"
    if os.environ.get("TRIVSPEC_WRITE_GOLDEN"):
        golden.write_text(out)
    assert out == golden.read_text()
    assert run(*args)[1] == out


def test_identity_is_refuted(tmp_path):
    space = {"algebra": {"field": "fp:5"}, "rows": 2, "cols": 2, "basis": [[["1", "0"], ["0", "1"]]]}
    code, doc = run_json("verify", "spectrum", "--in", write(tmp_path, "fi.json", space))
    assert code == 1
    assert doc["result"]["element"] == [["1", "0"], ["0", "1"]]
    assert doc["result"]["fixed_vector"] == ["1", "0"]


def test_construct_then_classify(tmp_path):
    code, built = run_json("construct", "triangular", "--field", "fp:7", "--degree", "3", "--n", "2")
    assert code == 0
    code, doc = run_json("classify", "optimal", "--in", write(tmp_path, "t.json", built))
    assert code == 0
    assert doc["result"]["partition"] == [1, 1]


def test_isotropic_sh_is_a_precondition_error(tmp_path):
    code, built = run_json("construct", "sh", "--field", "fp:5", "--degree", "2", "--n", "2")
    assert code == 0
    path = write(tmp_path, "sh.json", built)
    assert run_json("verify", "spectrum", "--in", path)[0] == 1
    code, doc = run_json("classify", "optimal", "--in", path)
    assert code == 3
    assert doc["error"]["code"] == "SpectrumNotTrivial"


def test_input_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    code, doc = run_json("verify", "spectrum", "--in", str(bad))
    assert code == 3
    assert doc["error"]["message"].startswith("/")
    space = {"algebra": {"field": "fp:5"}, "rows": 2, "cols": 2, "basis": [[["1", "0"], ["0", "x"]]]}
    code, doc = run_json("verify", "spectrum", "--in", write(tmp_path, "s.json", space))
    assert code == 3
    assert doc["error"]["message"].startswith("/basis/0/1/1")
    assert run("no-such-command")[0] == 3


def test_budget_exit_code():
    code, doc = run_json("--budget", "10", "search", "maxdim-trivspec", "--field", "fp:3", "--degree", "1", "--n", "2")
    assert code == 2
    assert doc["result"]["verdict"] == "BudgetExceeded"


def test_text_format(tmp_path):
    code, out = run("--format", "text", "search", "maxdim-trivspec", "--field", "fp:3", "--degree", "1", "--n", "2")
    assert code == 0
    assert "result.max: 1" in out.splitlines()
