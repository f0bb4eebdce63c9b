import io
import json
import subprocess
import sys

import pytest

from painleve4.algebra import UniPoly
from painleve4.algebra.serialize import ratfunc_from_dict, unipoly_from_list
from painleve4.cli import run
from painleve4.lattice import f_triple, okamoto_Q


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_okamoto_plain():
    assert cli("okamoto", "3", "2") == (0, "x^4 - 2*x^2 - 1\n", "")


def test_maya():
    assert cli("maya", "3", "2")[1] == "(2,1,1)\n"


@pytest.mark.parametrize("family", ["okamoto", "hermite"])
def test_both_routes_json(family):
    code, out, _ = cli("--format", "json", family, "2", "2", "--route", "both")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"query", "result", "routes", "checks"}
    assert doc["routes"]["toda"] == doc["routes"]["schur"] == doc["result"]
    assert doc["checks"] == [{"name": "routes agree", "pass": True}]


def test_json_round_trips():
    code, out, _ = cli("okamoto", "-2", "3", "--format", "json")
    assert code == 0
    assert unipoly_from_list(json.loads(out)["result"]) == okamoto_Q(-2, 3)
    code, out, _ = cli("solution", "okamoto", "-1", "-1", "--format", "json")
    doc = json.loads(out)
    assert tuple(ratfunc_from_dict(d) for d in doc["result"]["f"]) == f_triple("okamoto", -1, -1).f
    assert doc["result"]["alpha"] == ["-2", "1", "4"]
    assert all(c["pass"] for c in doc["checks"])


def test_latex_output():
    code, out, _ = cli("okamoto", "3", "2", "--format", "latex")
    assert out.strip() == "x^{4} - 2 x^{2} - 1"


def test_schur_command():
    code, out, _ = cli("schur", "(2,1,1)")
    assert code == 0
    assert out.strip() == "1/8*t1^4 - 1/2*t1^2*t2 - 1/2*t2^2 + t4"


def test_backlund_commands():
    assert cli("backlund", "s1 s0", "--target", "f1")[1].strip() == "(f0*f1^2 - a0*f1)/(f0*f1 + a1)"
    assert cli("backlund", "T1", "--target", "alpha")[1].splitlines() == ["a0 -> a0 + 3", "a1 -> a1 - 3", "a2 -> a2"]
    code, out, _ = cli("backlund", "s1 s0", "--target", "f2", "--seed", "A")
    assert code == 0 and out.strip() == "(x^4 + 2*x^2 - 1)/(x^3 + x)"


def test_solution_command():
    code, out, _ = cli("solution", "hermite", "0", "0")
    assert code == 0
    assert out.splitlines() == ["alpha = (3, 0, 0)", "f0 = 3*x", "f1 = 0", "f2 = 0", "verified: yes"]


def test_verify_suite():
    code, out, _ = cli("verify", "seeds")
    assert code == 0
    assert out.splitlines()[-1] == "seeds: 8/8 checks passed"


@pytest.mark.parametrize(
    "argv",
    [
        ("okamoto", "x", "1"),
        ("frobnicate",),
        ("schur", "(2,a)"),
        ("backlund", "s7"),
        ("verify", "nonsense"),
        ("okamoto", "1", "1", "--route", "sideways"),
        ("backlund", "s1", "--target", "g", "--seed", "B"),
    ],
)
def test_usage_errors(argv):
    code, out, err = cli(*argv)
    assert code == 2 and out == "" and err


@pytest.mark.parametrize(
    "argv",
    [("hermite", "-1", "0"), ("solution", "hermite", "0", "1"), ("backlund", "s1", "--target", "f0", "--seed", "B")],
)
def test_domain_errors(argv):
    code, _, err = cli(*argv)
    assert code == 3 and err


def test_failed_verification_exit_code(monkeypatch):
    import painleve4.cli as mod

    monkeypatch.setattr(mod, "okamoto_Q_schur", lambda m, n: UniPoly([1, 1]))
    code, _, err = cli("okamoto", "2", "0", "--route", "both")
    assert code == 1 and "mismatch" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "painleve4", "maya", "3", "0"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "(4,2)\n"


def test_verify_all():
    code, out, _ = cli("verify", "all")
    assert code == 0
    assert out.splitlines()[-1].startswith("all: ")
