import io
import json
import subprocess
import sys

import pytest

from ramify.cli import run_command

AS = ["--base", "laurent(p=2)", "--poly", "X^2+t*X+t"]
FIERCE = ["--base", "laurent(p=2, k=Fp(u))", "--poly", "X^2+t*X+u"]


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--json")
    assert code == 0, err
    return json.loads(out)


def test_report_schema():
    rep = run_json("report", *AS)
    assert list(rep) == ["schema_version", "input", "base", "extension", "invariants", "ramification",
                         "newton", "components"]
    assert rep["invariants"] == {"different_vL": "2/1", "discriminant_vK": "2/1", "class": "WildUnfierce"}
    assert rep["ramification"]["conductor"] == "2/1"
    assert rep["components"] == {"jumps": ["2/1"], "counts": [1, 2]}


def test_conductor_and_herbrand():
    assert run_json("conductor", *FIERCE)["log_conductor"]["value"] == "2/1"
    hb = run_json("herbrand", *AS)
    assert hb["lower_breaks"] == ["1/1"] and hb["upper_breaks"] == ["1/1"]


def test_components_csv():
    code, out, _ = run("components", *AS, "--csv")
    assert code == 0
    assert out.splitlines() == ["r,count", "1/1,1", "2/1,1", "3/1,2"]


def test_np_and_tower():
    np = run_json("np", *AS)
    assert np["shifted_by_root"]["points"] == [[0, "0/1"], [1, "1/1"], [2, "inf"]]
    tw = run_json("tower", *AS)
    assert tw["pass"] and tw["b"] == "2/1"


def test_basechange_and_defierce():
    bc = run_json("basechange", *AS, "--m", "3")
    assert bc["result"]["poly"] == "W^2+s^2*W+s"
    assert bc["checks"]["log_scales_by_m"] and bc["checks"]["c_strictly_below_m_c"]
    un = run_json("basechange", *AS, "--unramified", "X^2+X+1")
    assert un["checks"]["conductor_invariant"]
    df = run_json("defierce", *FIERCE)
    assert len(df["rounds"]) == 1 and df["rounds"][0]["after"] == ["0/1", 0]
    hinted = run_json("defierce", *FIERCE, "--radicial", "u")
    assert hinted["rounds"][0]["radicial"]["lift"] == "u" and hinted["final_s"] == 0
    assert run_json("defierce", *AS)["rounds"] == []


@pytest.mark.parametrize("argv,code,err_code", [
    (["report", "--base", "laurent(p=2)", "--poly", "X^2 + + t"], 2, "SyntaxError"),
    (["report", "--base", "laurent(p=2)", "--poly", "X^2+t"], 2, "Inseparable"),
    (["basechange", *AS, "--m", "2"], 2, "NotCoprime"),
    (["herbrand", *FIERCE], 2, "FierceInput"),
    (["report", "--base", "laurent(p=2)", "--poly", "X^2+X+1", "--poly", "Y^2+t*Y+t", "--precision-cap", "8"],
     0, None),
    (["basechange", "--base", "laurent(p=3)", "--poly", "X^2-t", "--m", "2"], 4, "SplitsAfterBaseChange"),
])
def test_exit_codes_and_error_stream(argv, code, err_code):
    got, out, err = run(*argv)
    assert got == code
    if err_code:
        assert out == ""
        assert json.loads(err)["error"]["code"] == err_code


def test_precision_cap_is_honoured():
    got, _, err = run("conductor", "--base", "laurent(p=2)", "--poly", "X^2+t^9*X+t", "--precision-cap", "1")
    assert got in (0, 3)
    if got == 3:
        assert json.loads(err)["error"]["code"] == "PrecisionCapExceeded"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ramify", "conductor", *AS, "--json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["conductor"] == "2/1"
