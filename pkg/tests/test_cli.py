import json
import logging
import subprocess
import sys

import pytest

from ssmodpoly.cli import run
from ssmodpoly.oracles import phi_evaluated


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_bigchar_json(capsys):
    code, out, _ = call(capsys, "eval-bigchar", "--p", "1009", "--ell", "2", "--j", "7")
    assert code == 0
    d = json.loads(out)
    assert d == {"p": "1009", "ell": "2", "j": "7", "coefficients": ["371", "347", "726", "1"]}
    assert [int(c) for c in d["coefficients"]] == phi_evaluated(2, 7, 1009)


def test_sieve_plain(capsys):
    code, out, _ = call(capsys, "sieve", "--from", "10", "--to", "30", "--format", "plain")
    assert code == 0 and out.strip() == "11 13 17 19 23 29"


def test_sieve_supersingular_filter(capsys):
    code, out, _ = call(capsys, "sieve", "--from", "5", "--to", "100", "--supersingular-j", "0")
    assert code == 0
    assert all(int(q) % 3 == 2 for q in json.loads(out))


def test_biglevel_cache(capsys, caplog, tmp_path):
    argv = ["eval-biglevel", "--p", "1009", "--ell", "3", "--j", "11", "--cache-dir", str(tmp_path)]
    with caplog.at_level(logging.INFO, logger="ssmodpoly"):
        c1, out1, _ = call(capsys, *argv)
        assert "cache miss" in caplog.text
        caplog.clear()
        c2, out2, _ = call(capsys, *argv)
        assert "cache hit" in caplog.text
    assert c1 == c2 == 0 and out1 == out2
    assert [int(c) for c in json.loads(out1)["coefficients"]] == phi_evaluated(3, 11, 1009)


def test_eval_supersingular(capsys):
    code, out, _ = call(capsys, "eval-supersingular", "--p", "101", "--ell", "3", "--j", "66",
                        "--format", "plain")
    assert code == 0
    assert [int(c) for c in out.split()] == phi_evaluated(3, 66, 101)


def test_endring_order_to_j_round_trip(capsys):
    code, out, _ = call(capsys, "endring", "--p", "1009", "--j", "149")
    assert code == 0
    d = json.loads(out)
    assert d["discriminant"] == "1009"
    code, out, _ = call(capsys, "order-to-j", "--order", json.dumps(d))
    assert code == 0
    r = json.loads(out)
    assert ["149", "0"] in (r["j"], r["j_conjugate"])


def test_weber(capsys):
    code, out, _ = call(capsys, "weber", "--p", "1009", "--j", "149")
    assert code == 0
    d = json.loads(out)
    assert all(d["checks"].values())


@pytest.mark.parametrize("argv", [
    ["eval-bigchar", "--p", "1000", "--ell", "2", "--j", "7"],
    ["eval-bigchar", "--p", "1009", "--ell", "1009", "--j", "7"],
    ["eval-bigchar", "--p", "1009", "--ell", "2", "--j", "2000"],
    ["eval-bigchar", "--p", "1009", "--ell", "2", "--j", "x"],
    ["sieve", "--from", "30", "--to", "10"],
    ["order-to-j", "--order", "{not json"],
    ["eval-bigchar", "--p", "1009"],
    ["no-such-command"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = call(capsys, *argv)
    assert code == 2


def test_computation_errors_exit_1(capsys):
    code, _, err = call(capsys, "endring", "--p", "1009", "--j", "1")
    assert code == 1
    assert err.startswith("NotSupersingular")
    code, _, err = call(capsys, "eval-supersingular", "--p", "1009", "--ell", "2", "--j", "1")
    assert code == 1 and err.startswith("NotSupersingular")


def test_output_is_reproducible():
    cmd = [sys.executable, "-m", "ssmodpoly.cli", "--seed", "3", "endring", "--p", "1009", "--j", "149"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a


def test_selftest(capsys):
    code, out, _ = call(capsys, "selftest")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)
