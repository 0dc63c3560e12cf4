import json
import subprocess
import sys

import pytest

from dahajones import checks, cli, knots
from dahajones.symalg import LaurentPoly, NotPolynomial, parse_poly


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["format"] == cli.JSON_FORMAT
    return obj


def test_super_trefoil_text(capsys):
    code, out, _ = run(capsys, "super", "--p", "1", "--m", "1")
    assert code == 0
    assert parse_poly(out.strip()) == parse_poly("1 + q*a + q*t")


@pytest.mark.parametrize("method", ["daha", "formula"])
def test_super_at_minus_t(capsys, method):
    code, out, _ = run(capsys, "super", "--p", "1", "--m", "2", "--method", method, "--at", "a=-t")
    assert (code, out.strip()) == (0, "1")


def test_jones_json_round_trip(capsys):
    obj = run_json(capsys, "jones", "--algebra", "a1", "--r", "3", "--s", "2", "--m", "2")
    assert LaurentPoly.from_json_obj(obj["polynomial"]) == knots.jd_a1(3, 2, 2)
    assert obj["command"] == "jones"


def test_jones_text_round_trip(capsys):
    code, out, _ = run(capsys, "jones", "--algebra", "cc1", "--r", "3", "--s", "2", "--m", "1")
    assert code == 0
    assert parse_poly(out.strip()) == knots.jd_cc1(3, 2, 1)


def test_jones_set_matches_reduction(capsys):
    obj = run_json(capsys, "jones", "--algebra", "cc1", "--r", "3", "--s", "2", "--m", "1",
                   "--set", "u1=t,u0=1,v0=1,v1=1")
    assert LaurentPoly.from_json_obj(obj["polynomial"]) == knots.jd_a1(3, 2, 1)


def test_jones_tilde(capsys):
    code, out, _ = run(capsys, "jones", "--algebra", "a1", "--r", "5", "--s", "1", "--m", "2",
                       "--tilde")
    assert (code, out.strip()) == (0, "1")


def test_awpoly_json(capsys):
    obj = run_json(capsys, "awpoly", "--algebra", "cc1", "--n", "1")
    assert [c["X"] for c in obj["coefficients"]] == [0, 1]


def test_awpoly_text(capsys):
    code, out, _ = run(capsys, "awpoly", "--algebra", "a1", "--n", "2", "--symmetric")
    assert code == 0
    assert out.splitlines()[0] == "P_2 (A1)"
    assert out.splitlines()[-1].startswith("eigenvalue: ")


def test_verlinde_single(capsys):
    obj = run_json(capsys, "verlinde", "--N", "5", "--k1", "1")
    assert obj["failures"] == 0
    assert obj["tuples"][0]["M"] == 3


def test_verlinde_search(capsys):
    code, out, _ = run(capsys, "verlinde", "--search", "--max-N", "3")
    assert code == 0
    assert out.strip().endswith(", 0 failures")


def test_verify_fixtures(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "fixtures")
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines()[:-1])


# --------------------------------------------------------------------------
# exit codes

@pytest.mark.parametrize("argv", [
    ["jones", "--algebra", "a1", "--r", "2", "--s", "4", "--m", "1"],
    ["jones", "--algebra", "a1", "--r", "3", "--s", "2", "--m", "-1"],
    ["jones", "--algebra", "cc1", "--r", "3", "--s", "2", "--m", "1", "--set", "w=1"],
    ["jones", "--algebra", "cc1", "--r", "3", "--s", "2", "--m", "1", "--set", "u1=1+t"],
    ["jones", "--algebra", "cc1", "--r", "3", "--s", "2", "--m", "1", "--set", "u1=2*t"],
    ["super", "--p", "2", "--m", "1", "--method", "formula"],
    ["super", "--p", "0", "--m", "1"],
    ["super", "--p", "1", "--m", "1", "--at", "b=1"],
    ["awpoly", "--n", "-1", "--symmetric"],
    ["verlinde", "--N", "4", "--k1", "2"],
    ["verlinde", "--N", "4", "--k1", "1/3"],
])
def test_invalid_input_exits_3(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == cli.EXIT_INPUT
    assert "invalid input" in err


@pytest.mark.parametrize("argv", [
    [], ["jones", "--algebra", "a1"], ["super", "--p", "x", "--m", "1"], ["verlinde"],
    ["verify", "--suite", "nope"],
])
def test_usage_exits_64(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = cli.main(argv)
        raise SystemExit(code)
    assert exc.value.code == cli.EXIT_USAGE


def test_uncertified_exits_2(capsys, monkeypatch):
    def refuse(*args, **kwargs):
        raise NotPolynomial("quotient has a remainder")
    monkeypatch.setattr(knots, "jd_a1", refuse)
    code, _, err = run(capsys, "jones", "--algebra", "a1", "--r", "3", "--s", "2", "--m", "1")
    assert code == cli.EXIT_CERT
    assert "not certified" in err


def test_failed_verification_exits_1(capsys, monkeypatch):
    monkeypatch.setattr(checks, "run_suite",
                        lambda name, quick=True: [checks.Result("planted", False, "x")])
    code, out, _ = run(capsys, "verify", "--suite", "fixtures")
    assert code == cli.EXIT_FAIL
    assert out.splitlines()[0].startswith("FAIL planted")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dahajones", "super", "--p", "1", "--m", "1",
                           "--format", "json"], capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["format"] == 1


@pytest.mark.slow
def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all")
    assert code == 0, out
