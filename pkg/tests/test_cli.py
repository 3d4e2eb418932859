import json

import pytest

from amitsur.cli import SCHEMA, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == SCHEMA
    assert json.loads(json.dumps(rep)) == rep
    return rep


def test_check_group(capsys):
    rep = run_json(capsys, "check-group", "7", "9", "2")
    assert rep["results"]["verdict"]["outcome"] == "Candidate"
    assert rep["results"]["verdict"]["known_status"] == "KnownAmitsur"
    rep = run_json(capsys, "check-group", "7", "3", "2")
    assert rep["results"]["verdict"]["rule"] == "Thm3.1"
    assert rep["results"]["certificate"]["obstruction"]


def test_invalid_presentation_exit_2(capsys):
    code, _, err = run(capsys, "check-group", "7", "9", "3")
    assert code == 2 and "not a valid presentation" in err
    code, _, _ = run(capsys, "check-group", "0", "9", "3")
    assert code == 2
    code, _, _ = run(capsys, "verify-identity", "7", "1", "1")
    assert code == 2


def test_scan(capsys):
    code, out, _ = run(capsys, "scan-odd", "--max", "171")
    assert code == 0 and out.strip().endswith("exceptional: 63, 117")
    code, out, _ = run(capsys, "scan-odd", "--max", "45")
    assert out.strip().endswith("exceptional: none")
    rep = run_json(capsys, "scan-odd", "--max", "171", "--jobs", "2")
    assert rep["results"]["exceptional"] == [63, 117]


def test_scan_bound(capsys):
    code, _, _ = run(capsys, "scan-odd", "--max", "20001")
    assert code == 2


def test_verify_identity(capsys):
    rep = run_json(capsys, "verify-identity", "7", "3", "2")
    assert rep["results"]["product"] == "1 - a - a^3 + a^4"
    assert not any(f["vanishes"] for f in rep["results"]["factors"])
    rep = run_json(capsys, "verify-identity", "7", "9", "2", "--verbose")
    assert [f["i"] for f in rep["results"]["factors"] if f["vanishes"]] == [3, 6]
    assert len(rep["results"]["snapshots"]) == 9
    rep = run_json(capsys, "verify-identity", "5", "2", "4")
    assert rep["results"]["product"] == "-1 + a^3"


def test_build_algebra(capsys):
    rep = run_json(capsys, "build-algebra", "--preset", "63")
    res = rep["results"]
    assert res["dim_Q"] == 36 and res["embedding"]["group_order"] == 63 and res["embedding"]["isomorphic"]
    assert res["center"]["dim_Q"] == 4
    assert sorted(q["min_poly"] for q in res["center"]["quadratic_elements"]) == ["t^2 + 3", "t^2 + 7"]
    rep = run_json(capsys, "build-algebra", "--preset", "quaternion-2")
    assert rep["results"]["embedding"]["group_order"] == 8 and rep["results"]["embedding"]["ok"]
    rep = run_json(capsys, "build-algebra", "--preset", "117", "--sample", "3")
    assert rep["results"]["dim_Q"] == 72 and rep["results"]["sampling"]["singular_count"] == 0


def test_build_algebra_errors(capsys):
    assert run(capsys, "build-algebra", "--k", "21", "--s", "16", "--omega-exp", "1")[0] == 2
    assert run(capsys, "build-algebra", "--preset", "nope")[0] == 2
    assert run(capsys, "build-algebra", "--k", "21")[0] == 2


def test_custom_algebra(capsys):
    rep = run_json(capsys, "build-algebra", "--k", "21", "--s", "16", "--omega-exp", "7", "--a-exp", "3")
    assert rep["results"]["embedding"]["presentation"] == [7, 9, 2]


def test_json_is_stable(capsys):
    _, first, _ = run(capsys, "check-group", "13", "9", "3", "--json")
    _, second, _ = run(capsys, "check-group", "13", "9", "3", "--json")
    assert first == second
    rep = run_json(capsys, "check-group", "13", "9", "3", "--timing")
    assert "elapsed_s" in rep


def test_unsafe_max_warns(capsys):
    code, _, err = run(capsys, "check-group", "7", "9", "2", "--unsafe-max", "20000")
    assert code == 0 and "warning" in err


@pytest.mark.parametrize("argv", [["--version"], []])
def test_argparse_exits(argv):
    with pytest.raises(SystemExit):
        main(argv)
