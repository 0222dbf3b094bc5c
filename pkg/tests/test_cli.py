from __future__ import annotations

import json
import subprocess
import sys

import pytest

from rigid_newton.cli import main, read_report


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_centralizer_example(capsys):
    code, out = run(capsys, "centralizer", "--datum", "G2:sc", "--nu", "1/2,0", "--action", "inversion")
    assert code == 0
    res = read_report(out)["result"]
    assert res["type_gamma"] == "A1xA1" and res["levi_regular"] is False


def test_tn_group_example(capsys):
    code, out = run(capsys, "tn-group", "--datum", "torus:1", "--action", "inversion", "--level", "2")
    assert code == 0 and read_report(out)["result"]["invariant_factors"] == [4]


def test_coweight_coordinates_on_simply_connected_a2(capsys):
    # ν = ω1^vee/2 pairs 1/2 with α1 and 0 with α2
    _, out = run(capsys, "centralizer", "--datum", "A:2", "--nu", "1/2,0")
    res = read_report(out)["result"]
    assert res["nu_lattice"] == ["1/3", "1/6"]
    assert res["type_single"] == "A1+T1"
    _, out = run(capsys, "centralizer", "--datum", "A:2", "--nu", "1/2,0", "--nu-basis", "lattice")
    assert read_report(out)["result"]["nu_lattice"] == ["1/2", "0"]


def test_round_trip_and_determinism(capsys, tmp_path):
    argv = ["realize-levi", "--datum", "A2", "--action", "[[[-1,1],[0,1]]]", "--lambda", "1,0"]
    code, first = run(capsys, *argv)
    assert code == 0
    assert read_report(first)["result"]["level"] == 5
    path = tmp_path / "report.json"
    path.write_text(first)
    code, again = run(capsys, "realize-levi", "--input", str(path))
    assert code == 0 and again == first
    _, third = run(capsys, *argv)
    assert third == first


def test_json_problem_file(capsys, tmp_path):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"schema": 1, "datum": {"family": "A", "rank": 1},
                                "action": {"generators": [[[-1]]]}, "nu": ["1/4"]}))
    code, out = run(capsys, "band-image", "--input", str(path))
    assert code == 0 and read_report(out)["result"]["contains"] is True


@pytest.mark.parametrize("argv,invariant", [
    (["centralizer", "--datum", "Q2", "--nu", "0,0"], None),
    (["centralizer", "--datum", "A1+T1", "--nu", "1/2,0"], "well-formed input"),
    (["facet", "--datum", "A1", "--point", "3/2"], None),
    (["tn-group", "--datum", "torus:1", "--action", "[[[2]]]", "--level", "2"], None),
    (["relative-weyl", "--datum", "G2", "--action", "inversion", "--sub", "1,3,7,9"], None),
    (["centralizer", "--datum", "A1", "--nu", "x"], "well-formed input"),
])
def test_validation_errors_exit_2(capsys, argv, invariant):
    code, out = run(capsys, *argv)
    assert code == 2
    err = read_report(out)["error"]
    assert err["invariant"] and err["message"]
    if invariant:
        assert err["invariant"] == invariant


def test_missing_input_file(capsys, tmp_path):
    code, _ = run(capsys, "alcove", "--input", str(tmp_path / "none.json"))
    assert code == 2


def test_alcove_and_facet(capsys):
    _, out = run(capsys, "alcove", "--datum", "A1", "--nu", "5/4", "--nu-basis", "lattice")
    res = read_report(out)["result"]
    assert res["point"] == ["1/4"] and res["facet_indices"] == []
    _, out = run(capsys, "facet", "--datum", "A1", "--point", "0", "--nu-basis", "lattice")
    assert read_report(out)["result"]["facet_indices"] == [0, 1]


def test_levi_suitable_and_relative_weyl(capsys):
    _, out = run(capsys, "levi-suitable", "--datum", "G2", "--action", "inversion", "--level", "2")
    res = read_report(out)["result"]
    assert res["count"] == 4 and res["levi_suitable_count"] < 4
    _, out = run(capsys, "relative-weyl", "--datum", "A1", "--action", "inversion")
    assert read_report(out)["result"]["order"] == 2


def test_casebook_single_and_list(capsys):
    code, out = run(capsys, "casebook", "run", "tn-norm-one")
    assert code == 0 and read_report(out)["summary"]["failed"] == []
    code, out = run(capsys, "casebook", "list")
    assert code == 0 and "g2-nonadm" in read_report(out)["cases"]
    code, _ = run(capsys, "casebook", "run", "nope")
    assert code == 2


def test_casebook_all_reports_failures_with_exit_1(capsys):
    code, out = run(capsys, "casebook", "run", "--all")
    summary = read_report(out)["summary"]
    assert summary["total"] == 9
    assert code == (1 if summary["failed"] else 0)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rigid_newton", "tn-group", "--datum", "torus:1",
                           "--action", "inversion", "--level", "2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["invariant_factors"] == [4]
