import json

import pytest
from click.testing import CliRunner

from crystalmonoid.cli import main
from crystalmonoid.crystal import _is_highest_weight, _raise, parse_type
from crystalmonoid.presentations import is_tableau_reading


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_nf_examples():
    r = run("nf", "--type", "G2", "1 -1")
    assert r.exit_code == 0 and r.output.splitlines()[0] == "ε"
    r = run("nf", "--type", "A:2", "2 1")
    assert r.exit_code == 0 and r.output.splitlines()[1:] == ["[1 2]", "columns: [2] [1]"]
    r = run("nf", "--type", "A:3", "2 1 1 3")
    assert r.output.splitlines() == ["2 1 1 3", "[1 1 2]", "[3]", "columns: [2] [1] [1 3]"]
    assert run("nf").output.splitlines()[0] == "ε"


def test_nf_json_with_oracle():
    r = run("nf", "--type", "A:3", "--json", "--oracle", "2 1 1 3")
    data = json.loads(r.output)
    assert r.exit_code == 0
    assert data["nf"] == data["oracle"]
    assert [x for c in data["columns"] for x in c] == data["nf"]


def test_eq_exit_codes():
    assert run("eq", "--type", "A:3", "2 1 1 3", "2 3 1 1").exit_code == 0
    assert run("eq", "--type", "A:3", "1 2 3", "1 2 3").exit_code == 0
    assert run("eq", "--type", "A:3", "1", "2").exit_code == 1
    assert json.loads(run("eq", "--json", "1", "2").output) == {"type": "A:2", "equal": False}


def test_iso_exit_codes():
    assert run("iso", "--type", "A:3", "1 1 2", "1 2 1").exit_code == 0
    assert run("iso", "--type", "A:3", "", "1 2 3").exit_code == 1
    assert run("iso", "--type", "C:2", "1 -1", "1 -1").exit_code == 0


def test_usage_errors():
    r = run("nf", "--type", "X:1", "1")
    assert r.exit_code == 2
    assert run("nf", "--type", "A:2", "7").exit_code == 2
    assert run("nf", "--type", "A:2", "one").exit_code == 2
    assert run("check", "bogus").exit_code == 2


def test_resource_limits():
    assert run("component", "--type", "A:3", "--max-vertices", "3", "1 1 2").exit_code == 3
    # 1 3 2 is not a tableau reading, so the oracle has to search past it
    assert not is_tableau_reading(parse_type("A:3"), (1, 3, 2))
    assert run("nf", "--type", "A:3", "--oracle", "--max-class", "1", "1 3 2").exit_code == 3
    assert run("rules", "--type", "B:9").exit_code == 3


def test_columns_and_rules():
    r = run("columns", "--type", "G2")
    assert r.exit_code == 0 and len(r.output.splitlines()) == 21
    assert len(json.loads(run("columns", "--type", "G2", "--json").output)) == 21
    r = run("rules", "--type", "A:2")
    assert r.exit_code == 0 and json.loads(r.output)
    r = run("rules", "--type", "A:2", "--presentation")
    assert r.exit_code == 0 and all({"lhs", "rhs"} <= set(x) for x in json.loads(r.output))


def test_component_outputs():
    dot = run("component", "--type", "A:3", "--dot", "2 1 1 3")
    assert dot.exit_code == 0 and dot.output.startswith("digraph crystal {")
    assert dot.output == run("component", "--type", "A:3", "--dot", "2 1 1 3").output
    data = json.loads(run("component", "--type", "A:2", "--json", "1").output)
    assert data["vertices"] == ["1", "2"]
    assert run("component", "--type", "A:3", "1 2 3").output.startswith("1 vertices, 0 edges")


def test_weight_and_raise():
    assert run("wt", "--type", "A:3", "1 1 2").output.strip() == "2 1 0"
    data = json.loads(run("raise", "--type", "A:3", "--json", "2 1 3").output)
    a3 = parse_type("A:3")
    w0, seq = _raise(a3, (2, 1, 3))
    assert data["highest"] == list(w0) and data["steps"] == [f"e{i}" for _, i in seq]
    assert _is_highest_weight(a3, w0)


@pytest.mark.parametrize("suite", ["oracle", "rules", "dfa"])
def test_check_suites(suite):
    r = run("check", "--type", "C:3" if suite == "oracle" else "A:2", suite)
    assert r.exit_code == 0, r.output
    assert "0 failed" in r.output


def test_check_json():
    data = json.loads(run("check", "--type", "A:2", "--json", "edges", "presentation").output)
    assert [d["suite"] for d in data] == ["edges", "presentation"]
    assert all(d["failed"] == 0 for d in data)
