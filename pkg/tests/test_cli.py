"""Command-line behaviour: golden outputs, formats, exit codes and determinism."""
from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from sjlab import cli
from sjlab.laurent import UV, LaurentPoly, NotDivisible, VarSpace


def run(args, env_format=None):
    env = dict(os.environ)
    env.pop(cli.FORMAT_ENV, None)
    if env_format is not None:
        env[cli.FORMAT_ENV] = env_format
    return subprocess.run(
        [sys.executable, "-m", "sjlab", *args],
        capture_output=True,
        text=True,
        env=env,
        check=False,
        timeout=300,
    )


@pytest.mark.parametrize(
    "args, expected",
    [
        (["sschur", "--m", "1", "--n", "1", "--lambda", "1"], "x1 - y1"),
        (["euler", "--family", "odd", "--m", "2", "--n", "1", "--lambda", ""], "2"),
        (["sjacobi", "--m", "1", "--n", "1", "--lambda", "1", "--special", "odd"], "u1 - v1"),
        (["sschur", "--m", "1", "--n", "1", "--lambda", "1,1"], "-x1 y1 + y1^2"),
        (["euler", "--m", "1", "--n", "1", "--lambda", "1", "--vars", "uv"], "u1 - v1"),
    ],
)
def test_golden_text(args, expected):
    result = run(args)
    assert result.returncode == 0, result.stderr
    assert result.stdout.strip() == expected


def test_json_schema_via_environment():
    result = run(["sjacobi", "--m", "1", "--n", "1", "--lambda", "1", "--special", "odd"], env_format="json")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload == {
        "vars": ["u1", "v1"],
        "unit": "1",
        "terms": [{"exp": [1, 0], "coeff": "1/1"}, {"exp": [0, 1], "coeff": "-1/1"}],
    }


def test_format_flag_overrides_environment():
    result = run(["--format", "text", "sschur", "--m", "1", "--n", "1", "--lambda", "1"], env_format="json")
    assert result.stdout.strip() == "x1 - y1"


def test_half_integer_json_exponents():
    result = run(["--format", "json", "euler", "--m", "1", "--n", "1", "--lambda", ""])
    payload = json.loads(result.stdout)
    assert payload["unit"] == "1/2"


def test_generic_parameters():
    result = run(["sjacobi", "--m", "1", "--n", "1", "--lambda", "1", "--p", "1/3", "--q", "2/7"])
    assert result.stdout.strip() == "u1 - v1"


@pytest.mark.parametrize(
    "args",
    [
        ["sschur", "--m", "1", "--n", "1", "--lambda", "2,2"],
        ["sschur", "--m", "1", "--n", "1", "--lambda", "1,2"],
        ["sjacobi", "--m", "1", "--n", "1", "--lambda", "1"],
        ["sjacobi", "--m", "1", "--n", "1", "--lambda", "1", "--p", "1"],
        ["sjacobi", "--m", "1", "--n", "1", "--lambda", "2", "--p", "1", "--q", "0"],
        ["euler", "--family", "even", "--route", "alternate", "--m", "1", "--n", "2", "--lambda", ""],
        ["verify", "--suite", "schur", "--m", "4", "--n", "1"],
        ["verify", "--suite", "schur", "--m", "1", "--n", "1", "--max-size", "9"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_two(args):
    result = run(args)
    assert result.returncode == 2
    assert result.stdout == ""
    assert result.stderr.startswith("error:")


def test_bad_environment_format():
    assert run(["sschur", "--m", "1", "--n", "1", "--lambda", "1"], env_format="yaml").returncode == 2


def test_internal_error_exits_three(monkeypatch, capsys):
    def broken(*_args, **_kwargs):
        raise NotDivisible(LaurentPoly.zero(VarSpace(UV, 1, 0)))

    monkeypatch.setattr(cli, "super_schur_jt", broken)
    assert cli.main(["sschur", "--m", "1", "--n", "1", "--lambda", "1"]) == 3
    assert "internal error" in capsys.readouterr().err


def test_verify_pass_and_failure_exit_codes():
    ok = run(["verify", "--suite", "schur", "--m", "2", "--n", "2", "--max-size", "4"])
    assert ok.returncode == 0
    assert ok.stdout.splitlines()[-1] == "schur: 22/22 passed"
    bad = run(["verify", "--suite", "schur", "--m", "2", "--n", "2", "--max-size", "4", "--literal"])
    assert bad.returncode == 1
    assert "FAIL weyl nu=(1,1) m=2 n=2 lambda=(1)" in bad.stdout


def test_verify_json_report():
    result = run(["--format", "json", "verify", "--suite", "pieri", "--m", "1", "--n", "1", "--max-size", "2", "--seed", "5"])
    report = json.loads(result.stdout)
    assert report["status"] == "pass" and report["failed"] == 0
    assert report["notes"]["seed"] == 5 and len(report["notes"]["points"]) == 3
    assert all("elapsed" not in case for case in report["cases"])


def test_verify_failure_carries_both_sides():
    result = run(["--format", "json", "verify", "--suite", "schur", "--m", "1", "--n", "2", "--max-size", "0", "--literal"])
    report = json.loads(result.stdout)
    (case,) = [c for c in report["cases"] if not c["pass"]]
    assert case["detail"]["lhs"]["terms"] == [{"exp": [0, 0, 0], "coeff": "-1/1"}]
    assert case["detail"]["rhs"]["terms"] == [{"exp": [0, 0, 0], "coeff": "1/1"}]


def test_verify_all_is_deterministic():
    args = ["--format", "json", "verify", "--suite", "all", "--m", "1", "--n", "1", "--max-size", "4", "--seed", "7"]
    first, second = run(args), run(args)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    parallel = run(args + ["--workers", "2"])
    assert parallel.stdout == first.stdout


def test_timing_is_opt_in():
    result = run(["--format", "json", "verify", "--suite", "factor", "--m", "1", "--n", "1", "--max-size", "2", "--timing"])
    report = json.loads(result.stdout)
    assert all("elapsed" in case for case in report["cases"])
