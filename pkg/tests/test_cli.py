import json
import subprocess
import sys

import pytest

from knotcomp import cli, sweeps
from knotcomp.braid import BraidWord, word_permutation
from knotcomp.oracle import cycle_count


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, want", [
    (("nc", "5", "4", "3", "2"), "1"),
    (("nc", "6", "4", "3", "0"), "2"),
    (("nc", "9", "-12", "7", "-10"), "3"),
    (("nc", "4", "2", "3", "1", "2", "1"), "3"),
])
def test_nc(capsys, argv, want):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == want


@pytest.mark.parametrize("argv, code", [
    (("nc", "3", "1", "4", "1"), 2),
    (("nc", "0", "1", "0", "0"), 2),
    (("nc", "1", "2", "3"), 2),
    (("nc", "5", str(2**63), "3", "1"), 3),
    (("trace", "0", "1", "0", "0"), 2),
    (("trace", "5", "1", "0", "0"), 2),
    (("oracle", "ttl", "5", "4", "3"), 2),
    (("braid", "tlink", "5", "4", "3", "2"), 2),
    (("verify", "no-such-suite"), 2),
])
def test_error_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert out == "" and err.startswith("error:")


def test_nc_json_round_trip(capsys):
    code, out, _ = run(capsys, "nc", "9", "6", "7", "4", "--json")
    assert code == 0
    assert json.loads(out) == {"p": 9, "q": 6, "r": 7, "s": 4, "count": 3}
    code, out, _ = run(capsys, "nc", "4", "2", "3", "1", "2", "1", "--json")
    assert json.loads(out) == {"p1": 4, "q1": 2, "p2": 3, "q2": 1, "p3": 2, "q3": 1, "count": 3}


def test_trace_text(capsys):
    code, out, _ = run(capsys, "trace", "5", "4", "3", "2")
    lines = out.splitlines()
    assert code == 0
    assert lines == ["1 5 4 3 2 Initial", "2 4 1 3 1 SwapBranch",
                     "3 3 2 1 0 FormingBranch", "SZero gcd(3,2)=1"]
    code, out, _ = run(capsys, "trace", "6", "0", "3", "2")
    assert out.splitlines() == ["1 6 0 3 2 Initial", "QZero 6-3+gcd(3,2)=4"]


def test_trace_json(capsys):
    code, out, _ = run(capsys, "trace", "9", "6", "7", "4", "--json")
    doc = json.loads(out)
    assert (doc["p"], doc["q"], doc["r"], doc["s"]) == (9, 6, 7, 4)
    assert [(st["p"], st["q"], st["r"], st["s"]) for st in doc["trace"]] == [
        (9, 6, 7, 4), (7, 3, 6, 4), (6, 1, 3, 2), (3, 0, 1, 0)]
    assert [st["branch"] for st in doc["trace"]] == [
        "Initial", "FormingBranch", "FormingBranch", "FormingBranch"]
    assert doc["terminal"] == "QZero" and doc["count"] == 3


def test_trace_tlink(capsys):
    code, out, _ = run(capsys, "trace", "4", "2", "3", "1", "2", "1", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 3 and doc["terminal"] == "q1=0"
    assert doc["trace"][1]["raw"] == [2, -1, 3, 3, 2, 1]
    assert doc["trace"][1]["standard"] == [3, 0, 2, 1, 2, 1]


def _parse_partition(text):
    count, part = text.split(" / ")
    cycles = [frozenset(map(int, c.strip("{}").split(","))) for c in part[1:-1].split("},{")]
    return int(count), cycles


@pytest.mark.parametrize("argv, count, cycles", [
    (("ttl", "5", "4", "3", "2"), 1, [{0, 1, 2, 3, 4}]),
    (("tlink", "4", "2", "3", "1", "2", "1"), 3, [{0}, {2}, {1, 3}]),
    (("ttl", "4", "2", "2", "0"), 2, [{0, 2}, {1, 3}]),
])
def test_oracle(capsys, argv, count, cycles):
    code, out, _ = run(capsys, "oracle", *argv)
    assert code == 0
    n, got = _parse_partition(out.strip())
    assert n == count
    assert set(got) == {frozenset(c) for c in cycles}


def test_oracle_json(capsys):
    code, out, _ = run(capsys, "oracle", "ttl", "4", "2", "2", "0", "--json")
    doc = json.loads(out)
    assert doc["count"] == 2 and doc["partition"] == [[0, 2], [1, 3]]
    assert (doc["p"], doc["q"], doc["r"], doc["s"]) == (4, 2, 2, 0)


@pytest.mark.parametrize("argv, want", [
    (("ttl", "3", "2", "2", "1"), {"strands": 3, "letters": [1, 2, 1, 2, 1]}),
    (("ttl", "3", "-1", "2", "0"), {"strands": 3, "letters": [-2, -1]}),
    (("ttl", "2", "0", "1", "5"), {"strands": 2, "letters": []}),
])
def test_braid(capsys, argv, want):
    code, out, _ = run(capsys, "braid", *argv)
    assert code == 0 and json.loads(out) == want


@pytest.mark.parametrize("nums", [
    ("ttl", "5", "4", "3", "2"), ("ttl", "9", "-6", "7", "11"), ("ttl", "6", "0", "3", "2"),
    ("tlink", "4", "2", "3", "1", "2", "1"), ("tlink", "2", "-3", "5", "2", "3", "4"),
])
def test_braid_consistent_with_nc(capsys, nums):
    _, out, _ = run(capsys, "braid", *nums)
    doc = json.loads(out)
    n = cycle_count(word_permutation(BraidWord(doc["strands"], doc["letters"])))
    _, out, _ = run(capsys, "nc", *nums[1:])
    assert n == int(out)


def test_verify_knot_family(capsys):
    code, out, _ = run(capsys, "verify", "knot-family", "--n-max", "50")
    doc = json.loads(out)
    assert code == 0
    assert doc["checked"] == 50 and doc["failures"] == [] and doc["ok"]


def test_verify_small_suites(capsys):
    for suite in ("oracle-ttl", "gcd-divisibility", "lemmas", "formulas"):
        code, out, _ = run(capsys, "verify", suite, "--p-max", "6", "--tlink-p-max", "3")
        assert code == 0, suite
        assert json.loads(out)["checked"] > 0


def test_verify_csv(capsys):
    code, out, err = run(capsys, "verify", "oracle-ttl", "--p-max", "5", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["suite,check,params,expected,got"]
    assert "failures=0" in err


def test_verify_failures_exit_4(capsys, monkeypatch):
    real = sweeps.ttl.count
    monkeypatch.setattr(sweeps.ttl, "count", lambda p, q, r, s: real(p, q, r, s) + (p == 3))
    code, out, _ = run(capsys, "verify", "oracle-ttl", "--p-max", "4")
    doc = json.loads(out)
    assert code == 4
    assert doc["failures"] and all(f["params"][0] == 3 for f in doc["failures"])


def test_verify_jobs_env(capsys, monkeypatch):
    monkeypatch.setenv("KNOTCOMP_JOBS", "2")
    code, out, _ = run(capsys, "verify", "oracle-ttl", "--p-max", "6")
    assert code == 0 and json.loads(out)["checked"] == sweeps.run_suite(
        "oracle-ttl", jobs=1, p_max=6).checked


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "knotcomp", "nc", "7", "6", "5", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
