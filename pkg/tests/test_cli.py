import io
import re
import subprocess
import sys
from importlib import resources
from pathlib import Path

import pytest

from sugeno_factor.cli import main

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"
PKG = resources.files("sugeno_factor") / "data"
HOTEL = str(PKG / "hotel.suf")
HOTEL_PHI = str(PKG / "hotel_phi.suf")


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    assert code in (0, 1, 2)
    return code, out.getvalue()


def records(text, machine):
    if machine:
        return [tuple(line.split("=", 1)) for line in text.splitlines()]
    return [tuple(re.split(r"\s{2,}", line, maxsplit=1)) for line in text.splitlines()]


def test_factorize_hotel_golden():
    code, out = run("factorize", HOTEL, "--simplify")
    assert code == 0
    assert out == (GOLDEN / "hotel_factorize.txt").read_text(encoding="utf-8")
    assert "integral      (2∧y1)∨(2∧y2)∨(3∧y3)∨(y1∧y3)∨(6∧y2∧y3)" in out
    assert "phi.service   *:1,**:2,***:7,****:8" in out


@pytest.mark.parametrize(
    "argv,golden",
    [
        (["factorize", HOTEL, "--simplify", "--machine"], "hotel_factorize_machine.txt"),
        (["factorize", HOTEL, "--policy", "upper", "--machine"], "hotel_factorize_upper_machine.txt"),
    ],
)
def test_machine_golden(argv, golden):
    code, out = run(*argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text(encoding="utf-8")


def test_machine_and_human_reports_carry_the_same_facts():
    for argv in (["factorize", HOTEL, "--simplify"], ["factorize", DATA / "two_window.suf"]):
        _, human = run(*argv)
        _, machine = run(*argv, "--machine")
        assert records(human, False) == records(machine, True)


def test_factorize_two_windows():
    code, out = run("factorize", DATA / "two_window.suf", "--machine")
    assert code == 1
    assert out == (GOLDEN / "two_window_machine.txt").read_text(encoding="utf-8")
    assert "reason=MultipleWindowValues" in out
    assert "witness.first=(1,0)" in out and "witness.second=(1,1)" in out


def test_factorize_non_monotone():
    code, out = run("factorize", DATA / "non_monotone.suf", "--machine")
    assert code == 1
    assert "reason=NotOrderPreserving" in out
    assert "witness.x=(0,1)" in out and "witness.y=(1,1)" in out


def test_factorize_constant_table_is_usage_error(tmp_path, capsys):
    p = tmp_path / "const.suf"
    p.write_text("chain a : 0,1\ncodomain : 0,1\n0 -> 1\n1 -> 1\n")
    code, _ = run("factorize", p)
    assert code == 2
    assert "constant table" in capsys.readouterr().err


def test_check_commands():
    assert run("check", HOTEL, "--axiom", "order-preserving")[0] == 0
    code, out = run("check", HOTEL, "--axiom", "pseudo-median-decomposable", "--phi", HOTEL_PHI)
    assert code == 0 and "holds  yes" in out
    code, out = run("check", DATA / "non_monotone.suf", "--axiom", "median-decomposable", "--machine")
    assert code == 1
    assert out.splitlines()[:2] == ["axiom=median-decomposable", "holds=no"]
    assert "witness.x=(0,1)" in out


def test_check_errors(capsys):
    code, _ = run("check", HOTEL, "--axiom", "bogus")
    assert code == 2
    err = capsys.readouterr().err
    assert "valid names" in err and "pseudo-idempotent" in err
    assert run("check", HOTEL, "--axiom", "pseudo-idempotent")[0] == 2
    assert run("check", HOTEL, "--axiom", "median-decomposable")[0] == 2


def test_eval():
    assert run("eval", HOTEL, "--at", "***,0,y") == (0, "7\n")
    assert run("eval", HOTEL, "--at", "*,-,n") == (0, "1\n")
    assert run("eval", HOTEL, "--at", "*,-")[0] == 2
    assert run("eval", HOTEL, "--at", "*,-,maybe")[0] == 2


def test_oracle_matches_factorize():
    assert run("oracle", DATA / "two_window.suf") == (1, "result  none\n")
    assert run("factorize", DATA / "two_window.suf")[0] == 1


def test_oracle_finds_factorization(tmp_path):
    p = tmp_path / "min.suf"
    p.write_text("chain a : 0,1\nchain b : 0,1\ncodomain : 0,1\n0,0 -> 0\n0,1 -> 0\n1,0 -> 0\n1,1 -> 1\n")
    code, out = run("oracle", p, "--machine")
    assert code == 0
    assert "result=factorizable" in out and "policy=" not in out
    assert run("factorize", p)[0] == 0


def test_oracle_budget(capsys):
    code, _ = run("oracle", HOTEL)
    assert code == 2
    assert "exceeds the budget" in capsys.readouterr().err


def test_parse_and_usage_errors(tmp_path, capsys):
    bad = tmp_path / "bad.suf"
    bad.write_text("chain a : 0,1\ncodomain : 0,1\n0 -> 1\n0 -> 0\n")
    assert run("factorize", bad)[0] == 2
    assert "duplicate-point" in capsys.readouterr().err
    assert run("factorize", tmp_path / "missing.suf")[0] == 2
    assert run("factorize")[0] == 2
    assert run("frobnicate", HOTEL)[0] == 2
    assert run("factorize", HOTEL, "--policy", "middle")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sugeno_factor", "eval", HOTEL, "--at", "****,+,y"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "8\n"
