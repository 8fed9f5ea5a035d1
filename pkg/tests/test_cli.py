import json
import logging
import os

import pytest

from ipf_cli import ERROR_PREFIX, run

GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden")

ALPHA = '{"g":[],"d":{"0":2},"r":{"0":3}}'
BETA = '{"g":[],"d":{"0":5},"r":{"0":1}}'
TWISTED = '{"g":[[0,1],[1,0]],"d":{"0":2},"r":{"1":3}}'


def golden(name):
    with open(os.path.join(GOLDEN_DIR, name)) as f:
        return f.read().strip()


def test_compose_golden():
    assert run(["compose", ALPHA, BETA]) == (golden("compose.txt"), 0)


def test_canonical_golden():
    assert run(["canonical", TWISTED]) == (golden("canonical.txt"), 0)


@pytest.mark.parametrize("argv, expected", [
    (["inverse", TWISTED], '{"g":[[0,1],[1,0]],"d":{"1":3},"r":{"0":2}}'),
    (["apply", '{"g":[],"d":{"0":2},"r":{"0":5}}', '{"0":4,"1":2}'], '{"0":7,"1":2}'),
    (["top", '{"g":[],"d":{"0":3},"r":{"0":2}}'], '{"g":[],"d":{"0":2},"r":{}}'),
    (["leq", TWISTED, TWISTED], "true"),
    (["leq", '{"g":[],"d":{},"r":{}}', '{"g":[],"d":{"0":2},"r":{"0":2}}'], "false"),
    (["green", "L", TWISTED, '{"g":[],"d":{"0":2},"r":{}}'], "true"),
    (["green", "R", TWISTED, '{"g":[],"d":{"0":2},"r":{}}'], "false"),
    (["green", "D", TWISTED, ALPHA], "true"),
    (["lift", '{"g":[[0,1],[1,0]],"z":{"1":2}}'], '{"g":[[0,1],[1,0]],"d":{"0":3},"r":{}}'),
    (["psi", TWISTED], '{"g":[[0,1],[1,0]],"pair":[{"1":2},{"1":3}]}'),
])
def test_verbs(argv, expected):
    assert run(argv) == (expected, 0)


def test_domain_errors_exit_1():
    text, code = run(["apply", '{"g":[],"d":{"0":2},"r":{"0":5}}', '{"1":2}'])
    assert code == 1
    assert text.startswith(ERROR_PREFIX) and "outside the domain" in text


def test_compose_overflow_exits_1():
    big = '{"g":[],"d":{"0":9223372036854775807},"r":{}}'
    text, code = run(["compose", big, big])
    assert code == 1
    assert text.startswith(ERROR_PREFIX) and "overflows int64" in text


@pytest.mark.parametrize("argv", [
    ["compose", ALPHA, '{"g":[],"d":{"0":0},"r":{}}'],
    ["inverse", "not json"],
    ["lift", '{"g":[],"z":{"0":1.5}}'],
    ["compose", "--strict", ALPHA, BETA],
    ["verify", "--cases", "-1"],
])
def test_parse_errors_exit_2(argv):
    text, code = run(argv)
    assert code == 2
    assert text.startswith(ERROR_PREFIX)


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["green", "X", ALPHA, ALPHA],
    ["compose", ALPHA],
    ["verify", "--suite", "nope"],
])
def test_usage_errors_exit_2(argv):
    assert run(argv) == ("", 2)


def test_verify_vacuous():
    text, code = run(["verify", "--suite", "all", "--cases", "0", "--seed", "0", "--bound", "16"])
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "verify suite=all cases=0 seed=0 bound=16"
    assert lines[1] == "generator index_range=8 max_value=16 max_support=4 max_moved=6 max_z=8"
    assert lines[-1] == "result PASS"
    assert all("passed=0 failed=0" in line for line in lines[3:-1])


@pytest.mark.parametrize("suite, cases, seed, bound", [
    ("axioms", 50, 42, 32),
    ("oracle", 30, 7, 16),
    ("bicyclic", 100, 3, 16),
    ("lemmas", 50, 11, 16),
])
def test_verify_suites_pass(suite, cases, seed, bound):
    text, code = run(["verify", "--suite", suite, "--cases", str(cases), "--seed", str(seed), "--bound", str(bound)])
    assert code == 0, text
    assert f"{suite} cases={cases} passed={cases} failed=0" in text.splitlines()


def test_verify_is_deterministic():
    argv = ["verify", "--suite", "all", "--cases", "200", "--seed", "42", "--bound", "16"]
    first = run(argv)
    assert first[1] == 0, first[0]
    assert run(argv) == first


def test_verify_jsonl_report():
    text, code = run(["verify", "--suite", "units", "--cases", "5", "--seed", "1", "--report_format", "jsonl"])
    assert code == 0
    records = [json.loads(line) for line in text.splitlines()]
    assert records[0]["verify"]["suite"] == "units"
    assert records[0]["verify"]["generator"]["max_moved"] == 6
    assert records[1] == {"suite": "units", "cases": 5, "passed": 5, "failed": 0}
    assert records[-1] == {"result": "PASS"}


def test_verify_reads_config(tmp_path):
    config = tmp_path / "small.yaml"
    config.write_text("suite: psi\ncases: 3\nseed: 5\nbound: 16\ngenerator:\n  index_range: 4\n  max_value: 6\n"
                      "  max_support: 2\n  max_moved: 2\n  max_z: 3\n")
    text, code = run(["verify", "--config", str(config)])
    assert code == 0
    assert text.splitlines()[:2] == [
        "verify suite=psi cases=3 seed=5 bound=16",
        "generator index_range=4 max_value=6 max_support=2 max_moved=2 max_z=3",
    ]
    text, _ = run(["verify", "--config", str(config), "--cases", "2"])
    assert "psi cases=2 passed=2 failed=0" in text


def test_verify_rejects_unknown_suite_in_config(tmp_path):
    config = tmp_path / "typo.yaml"
    config.write_text("suite: nope\ncases: 3\nseed: 5\nbound: 16\n")
    text, code = run(["verify", "--config", str(config)])
    assert code == 2
    assert text.startswith(ERROR_PREFIX) and "'nope'" in text


def test_log_level_applies_on_every_run():
    run(["compose", "--log_level", "ERROR", ALPHA, BETA])
    assert logging.getLogger().level == logging.ERROR
    run(["compose", "--log_level", "DEBUG", ALPHA, BETA])
    assert logging.getLogger().level == logging.DEBUG
