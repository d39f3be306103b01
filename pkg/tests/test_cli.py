import json
import subprocess
import sys

import pytest

from isoschub.cli import main


def run_cli(*argv):
    return subprocess.run(
        [sys.executable, "-m", "isoschub.cli", *argv],
        capture_output=True, text=True, timeout=600,
    )


def test_enumerate():
    result = run_cli("enumerate", "--k", "1", "--n", "2")
    assert result.returncode == 0
    assert json.loads(result.stdout) == [[], [1], [2], [3]]


def test_enumerate_text():
    result = run_cli("enumerate", "--k", "1", "--n", "2", "--format", "text")
    assert result.stdout.splitlines() == ["0", "1", "2", "3"]


def test_pieri_text():
    result = run_cli("pieri", "--family", "OG", "--n", "2", "--k", "1",
                     "--p", "1", "--lambda", "1", "--format", "text")
    assert result.returncode == 0
    assert result.stdout.strip() == "2*t[2]"


def test_qgiambelli_json():
    result = run_cli("qgiambelli", "--family", "IG", "--n", "3", "--k", "1",
                     "--lambda", "4,3")
    payload = json.loads(result.stdout)
    assert payload == {
        "family": "sigma",
        "terms": [
            {"gens": [4, 3], "q": 0, "num": 1, "den2": 0},
            {"gens": [2], "q": 1, "num": -1, "den2": 0},
        ],
    }


def test_multiply():
    result = run_cli("multiply", "--family", "IG", "--n", "2", "--k", "1",
                     "--lambda", "3", "--mu", "1")
    payload = json.loads(result.stdout)
    assert payload == {"terms": [{"parts": [], "q": 1, "num": 1, "den2": 0}]}


def test_qpieri():
    result = run_cli("qpieri", "--family", "OG", "--n", "2", "--k", "1",
                     "--p", "3", "--lambda", "3", "--format", "text")
    assert result.stdout.strip() == "q^2*t[]"


def test_deterministic_output():
    args = ("qgiambelli", "--family", "OG", "--n", "3", "--k", "2",
            "--lambda", "5,2,1")
    assert run_cli(*args).stdout == run_cli(*args).stdout


def test_argument_error_exit_code():
    result = run_cli("pieri", "--family", "IG", "--n", "2", "--k", "1",
                     "--p", "9", "--lambda", "1")
    assert result.returncode == 2
    assert "error" in result.stderr
    result = run_cli("pieri", "--family", "IG", "--n", "2", "--k", "1",
                     "--p", "1", "--lambda", "1,2")
    assert result.returncode == 2


def test_verify_small_grid():
    result = run_cli("verify", "--grid", "1:2", "--checks", "1,2,8")
    assert result.returncode == 0
    records = [json.loads(line) for line in result.stdout.splitlines()]
    assert records and all(rec["ok"] for rec in records)
    checks = {rec["check"] for rec in records}
    assert {"classical_giambelli", "quantum_giambelli", "small_quantum_ring"} <= checks


def test_verify_text_summary():
    result = run_cli("verify", "--grid", "1:2", "--checks", "8",
                     "--format", "text")
    assert result.returncode == 0
    assert "criterion 8" in result.stdout


def test_main_in_process(capsys):
    assert main(["enumerate", "--k", "0", "--n", "2"]) == 0
    out = capsys.readouterr().out
    assert json.loads(out) == [[], [1], [2], [2, 1]]


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as err:
        main(["pieri", "--family", "IG"])
    assert err.value.code == 2
