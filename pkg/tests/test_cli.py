import json
import subprocess
import sys

import pytest

from intarcs.arcs import SumDigits, Tau
from intarcs.cli import UsageError, execute, main, parse_invocation

REGRESSION_COMMANDS = [
    ["arc", "--g", "sb", "--b", "10", "33", "3"],
    ["witness", "--g", "sb", "--b", "10", "3", "6"],
    ["witness", "--g", "sb", "--b", "10", "7", "95"],
    ["witness", "--g", "sb", "--b", "2", "4", "3"],
    ["witness", "--g", "tau", "6", "16"],
    ["witness", "--g", "tau", "1", "120"],
    ["arc", "--g", "omega", "12", "1"],
    ["arc", "--g", "bigomega", "12", "5"],
    ["arc", "--g", "happy", "--b", "10", "--e", "2", "5", "1"],
    ["frobenius", "--g", "tau", "8"],
]


def run_json(argv, capsys):
    code = main(argv + ["--format", "json"])
    return json.loads(capsys.readouterr().out), code


def test_parse_examples():
    inv = parse_invocation(["arc", "--g", "sb", "--b", "10", "33", "3"])
    assert (inv.command, inv.function, inv.naturals) == ("arc", SumDigits(10), [33, 3])
    inv = parse_invocation(["eval", "--g", "tau", "8"])
    assert (inv.command, inv.function, inv.naturals) == ("eval", Tau, [8])


@pytest.mark.parametrize("argv, fragment", [
    (["arc", "--g", "sb", "33", "3"], "--b"),
    (["fly", "1"], "fly"),
    (["arc", "--g", "tau", "3x", "2"], "3x"),
    (["arc", "--g", "tau", "0", "2"], "n must be positive"),
    (["arc", "--g", "sb", "--b", "1", "3", "2"], "base"),
    (["arc", "--g", "tau", "--b", "10", "3", "2"], "--b"),
    ([], "missing command"),
])
def test_parse_errors_name_the_problem(argv, fragment):
    with pytest.raises(UsageError, match=fragment):
        parse_invocation(argv)


def test_exit_codes(capsys):
    assert main(["arc", "--g", "sb", "--b", "10", "33", "3"]) == 1
    assert main(["witness", "--g", "sb", "--b", "10", "3", "6"]) == 0
    assert main(["frobenius", "--g", "tau", "8"]) == 0
    assert main(["arc", "--g", "happy", "--b", "10", "--e", "2", "3", "2", "--k-max", "100"]) == 2
    assert main(["arc", "--g", "sb", "33", "3"]) == 64
    assert main(["eval", "--g", "tau", str(10**16)]) == 65
    assert main(["frobenius", "--g", "tau", "12"]) == 1
    assert main(["out", "--g", "sb", "--b", "10", "40"]) == 0
    capsys.readouterr()


def test_regression_payloads(capsys):
    rep, code = run_json(["arc", "--g", "sb", "--b", "10", "33", "3"], capsys)
    assert code == 1 and rep["verdict"]["certificate"]["kind"] == "modular_exhaustion"
    rep, code = run_json(["witness", "--g", "sb", "--b", "10", "3", "6"], capsys)
    assert code == 0 and rep["verdict"]["witness"] == "33"
    rep, code = run_json(["frobenius", "--g", "tau", "8"], capsys)
    assert code == 0 and rep["verdict"]["value"] == "3"
    assert rep["function"] == {"name": "tau"} and rep["inputs"] == ["8"]
    assert set(rep) == {"command", "function", "inputs", "verdict", "budget", "version", "timing"}


@pytest.mark.parametrize("argv", REGRESSION_COMMANDS)
def test_round_trip_and_reverification(argv, capsys):
    rep, code = run_json(argv, capsys)
    text = json.dumps(rep, sort_keys=True)
    assert json.loads(text) == rep
    again, code2 = run_json(argv, capsys)
    assert code2 == code
    strip = lambda r: {k: v for k, v in r.items() if k != "timing"}
    assert json.dumps(strip(again), sort_keys=True) == json.dumps(strip(rep), sort_keys=True)
    v = rep["verdict"]
    if "witness" in v:
        fn = rep["function"]
        flags = ["--g", fn["name"]]
        if "b" in fn:
            flags += ["--b", str(fn["b"])]
        if "e" in fn:
            flags += ["--e", str(fn["e"])]
        check = ["arc", *flags, *rep["inputs"], "--verify", v["witness"]]
        if "factorization" in v:
            check += ["--factors", v["factorization"]]
        assert main(check) == 0
        wrong = ["arc", *flags, rep["inputs"][0], str(int(rep["inputs"][1]) + 1), "--verify", v["witness"]]
        if "factorization" in v:
            wrong += ["--factors", v["factorization"]]
        assert main(wrong) == 1
        capsys.readouterr()


def test_other_commands(capsys):
    rep, code = run_json(["prefix", "--g", "tau", "6", "5"], capsys)
    assert [e["label"] for e in rep["verdict"]["entries"]] == [
        "non-member", "non-member", "non-member", "member", "non-member"]
    rep, code = run_json(["in", "--g", "tau", "1", "3"], capsys)
    assert [e["label"] for e in rep["verdict"]["entries"]] == ["member", "non-member", "non-member"]
    rep, code = run_json(["friends", "--g", "tau", "2", "3"], capsys)
    assert (rep["verdict"]["kind"], code) == ("friends", 0)
    rep, code = run_json(["polygon", "--g", "omega", "10", "3"], capsys)
    assert [2, 3, 5] in [p["vertices"] for p in rep["verdict"]["polygons"]]
    rep, code = run_json(["chain", "--g", "bigomega", "2", "64", "3"], capsys)
    assert rep["verdict"]["vertices"] == [2, 3, 4, 5]
    rep, code = run_json(["subgraph", "--g", "tau", "2"], capsys)
    assert [e["verdict"]["kind"] for e in rep["verdict"]["edges"]] == ["proven", "refuted"]
    rep, code = run_json(["out", "--g", "sb", "--b", "10", "33"], capsys)
    assert rep["verdict"]["characterization"]["strict_witness"] == 3
    rep, code = run_json(["arc", "--g", "tau", "4", "2", "--r", "1"], capsys)
    assert rep["verdict"]["witness"] == "5"
    rep, code = run_json(["arc", "--g", "sb", "--b", "10", "3", "6", "--k", "11"], capsys)
    assert rep["verdict"]["witness"] == "6"
    rep, code = run_json(["eval", "--g", "happy", "--b", "10", "--e", "2", "123"], capsys)
    assert rep["verdict"]["value"] == "14"


def test_budget_flags_and_env(monkeypatch):
    monkeypatch.setenv("INTARCS_ORACLE_K_MAX", "77")
    inv = parse_invocation(["arc", "--g", "tau", "3", "2"])
    assert inv.budget.oracle_k_max == 77
    inv = parse_invocation(["arc", "--g", "tau", "3", "2", "--k-max", "5"])
    assert inv.budget.oracle_k_max == 5
    report, _ = execute(inv)
    assert report["budget"]["oracle_k_max"] == 5


def test_selftest_subprocess():
    proc = subprocess.run([sys.executable, "-m", "intarcs", "selftest", "--format", "json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"]["kind"] == "pass"


def test_text_output(capsys):
    main(["witness", "--g", "sb", "--b", "10", "3", "6"])
    out = capsys.readouterr().out
    assert "proven" in out and "witness: 33" in out
