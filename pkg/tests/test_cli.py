import io
import json
import subprocess
import sys

import pytest

import mtutte.cli as cli
from mtutte.verify import CheckResult, VerificationReport

from .conftest import FIXTURES, GOLDEN

EX1 = str(FIXTURES / "example1.mtx")
EX2 = str(FIXTURES / "example2.psp")
MAJOR = str(FIXTURES / "example2_major.psp")
T_P2 = "x^2*z^2 + 3*x*z^2 + y*z^2 + 3*z^2 + 2*x*z + 2*y*z + 5*z + y + 2"


def call(*argv):
    err = io.StringIO()
    code, out = cli.run(list(argv), stderr=err)
    return code, out, err.getvalue()


def test_tutte_commands():
    assert call("tutte", EX1)[:2] == (0, "x^2 + x*y + y^2 + x + y\n")
    assert call("tutte", str(FIXTURES / "example1_graph.mtx"))[1] == "x^2 + x*y + y^2 + x + y\n"
    code, out, _ = call("tutte", EX2)
    assert code == 0
    assert call("tutte", MAJOR)[1] == out


def test_tutte_p2_value():
    from mtutte.poly import parse

    assert parse(call("tutte", EX2)[1]) == parse(T_P2)


def test_derive():
    assert call("derive", EX2, "-p", "0", "-q", "1")[1] == "z^2 + 2*z + 1\n"
    assert call("derive", EX1, "-p", "1", "--variant", "i-e")[1] == "2*x + y + 1\n"
    assert call("derive", EX1, "-p", "3")[1] == "0\n"


def test_expand_and_partition():
    code, out, _ = call("expand", EX1, "--family", "4")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 11
    assert lines[-1] == "total  x^2 + x*y + y^2 + x + y"
    assert lines[0] == "{1,3}  x^2"
    part = call("partition", EX1)[1].splitlines()
    assert "{1,3}  [{}, {1,3}]" in part and len(part) == 5


def test_fivevar():
    out = call("fivevar", EX1)[1]
    from mtutte.poly import parse, u, v, x, y

    xs, ys = x + u, y + v
    assert parse(out) == xs**2 + xs * ys + ys**2 + xs + ys


def test_verify_passes():
    code, out, _ = call("verify", EX2)
    assert code == 0
    assert out.splitlines()[-1].endswith("checks passed")
    code, out, _ = call("verify", "--random", "4", "--seed", "7", "--checks", "partition,census-identity")
    assert code == 0 and len(out.splitlines()) == 9


def test_json_shape():
    code, out, _ = call("--json", "tutte", EX1)
    doc = json.loads(out)
    assert code == 0 and set(doc) == {"command", "input", "result"}
    assert doc["command"] == "tutte" and doc["input"] == EX1
    assert doc["result"]["polynomial"] == "x^2 + x*y + y^2 + x + y"
    doc = json.loads(call("--json", "partition", EX1)[1])
    assert {"witness": "{1,3}", "bottom": "{}", "top": "{1,3}", "size": 4} in doc["result"]
    doc = json.loads(call("--json", "verify", EX1, "--checks", "partition")[1])
    assert doc["result"]["passed"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ["tutte", "/nonexistent/file.mtx"],
        ["verify", EX1, "--checks", "bogus"],
        ["verify"],
        ["derive", EX1, "-p", "-1"],
        ["table", EX1, "--which", "9"],
        ["frobnicate"],
    ],
)
def test_errors_exit_1(argv):
    code, out, _ = call(*argv)
    assert code == 1 and out == ""


def test_parse_error_message(tmp_path):
    bad = tmp_path / "bad.mtx"
    bad.write_text("matroid\nelements 1 1\n")
    code, _, err = call("tutte", str(bad))
    assert code == 1 and "line 2" in err and "duplicate" in err
    bad.write_text("perspective\nelements 1 2\nm bases {1} {2}\nmprime bases {1,2}\n")
    code, _, err = call("tutte", str(bad))
    assert code == 1 and "circuit" in err


def test_failed_verification_exits_2(monkeypatch):
    def failing(p, names, instance=""):
        return VerificationReport([CheckResult("partition", instance, False, "subset {1} is covered twice")])

    monkeypatch.setattr(cli, "run_checks", failing)
    code, out, err = call("verify", EX1)
    assert code == 2
    assert out.startswith("FAIL  partition") and "covered twice" in out
    assert "verification failed" in err


@pytest.mark.parametrize("which, src", [(1, EX1), (2, EX1), (3, EX1), (4, EX2), (5, EX2)])
def test_tables_match_golden(which, src):
    code, out, _ = call("table", src, "--which", str(which))
    assert code == 0
    assert out.encode() == (GOLDEN / f"table{which}.csv").read_bytes()


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mtutte", "tutte", EX1], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "x^2 + x*y + y^2 + x + y\n"
    proc = subprocess.run([sys.executable, "-m", "mtutte", "tutte", "/nonexistent"], capture_output=True, text=True)
    assert proc.returncode == 1 and "error" in proc.stderr
    proc = subprocess.run([sys.executable, "-m", "mtutte", "--json", "tutte", EX2, "extra"], capture_output=True, text=True)
    assert proc.returncode == 1
