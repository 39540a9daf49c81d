import csv
import io
import math
import subprocess
import sys

import pytest

from lambertw import lambert_w
from lambertw.branch import INV_E
from lambertw.cli import fmt, main, parse_real


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_eval_examples():
    assert run("eval", "--branch", "0", "1") == (0, "0.5671432904097838\n")
    assert run("eval", "--branch", "0", "0") == (0, "0\n")
    assert run("eval", "--branch", "-1", "0") == (0, "-inf\n")
    assert run("eval", "-1/e") == (0, "-1\n")
    assert run("eval", "--branch", "-1", "-1/e") == (0, "-1\n")


@pytest.mark.parametrize("branch, x", [(0, "1e-300"), (0, "12345.678"), (-1, "-1e-300"), (-1, "-0.2"), (0, "-1/e+1e-7")])
def test_eval_round_trips_library(branch, x):
    code, text = run("eval", "--branch", str(branch), x)
    assert code == 0
    assert float(text) == lambert_w(branch, parse_real(x)).value


def test_domain_error_exit_code(capsys):
    assert run("eval", "-1")[0] == 2
    assert run("eval", "--branch", "-1", "0.5")[0] == 2
    assert "below the branch point" in capsys.readouterr().err


def test_nan_on_domain_error():
    assert run("eval", "--nan-on-domain-error", "-1") == (0, "nan\n")


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "--branch", "1", "0.5"],
        ["eval", "abc"],
        ["frobnicate"],
        [],
        ["sweep", "--lo", "1", "--hi", "0"],
        ["sweep", "--lo", "0", "--hi", "1", "--evaluator", "nope"],
        ["gh", "--x", "1"],
        ["gh", "--x", "1", "--xmax", "2", "--X0", "0"],
    ],
)
def test_usage_errors(argv, capsys):
    # argparse exits on its own; later checks come back as a return code
    try:
        code = main(argv, out=io.StringIO())
    except SystemExit as exc:
        code = exc.code
    assert code == 1


def test_parse_real():
    assert parse_real("-1/e") == -INV_E
    assert parse_real("-1/e+1e-3") == -INV_E + 1e-3
    assert parse_real("1/e") == INV_E
    assert parse_real(" 2.5 ") == 2.5
    assert math.isinf(parse_real("-inf"))


def test_fmt():
    assert fmt(0.0) == "0"
    assert fmt(5.0) == "5"
    assert fmt(0.1) == "0.1"
    assert fmt(-math.inf) == "-inf"
    assert fmt(math.nan) == "nan"


def test_sweep_csv(tmp_path):
    args = ["sweep", "--branch", "0", "--evaluator", "piecewise", "--lo", "-1/e", "--hi", "0.3", "--n", "50"]
    code, text = run(*args)
    assert code == 0
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["x", "approx", "reference", "delta"]
    assert len(rows) == 51
    assert rows[1][2] == "nan" and rows[1][3] == "nan"
    assert min(float(r[3]) for r in rows[2:]) >= 5
    assert "\r" not in text

    path = tmp_path / "out.csv"
    assert run(*args, "--output", str(path)) == (0, "")
    assert path.read_bytes() == text.encode("utf-8")


def test_sweep_deterministic():
    args = ["sweep", "--grid", "log", "--lo", "0.3", "--hi", "1e5", "--n", "300", "--evaluator", "piecewise+halley1"]
    assert run(*args) == run(*args)


def test_sweep_lower_branch_log_grid():
    code, text = run("sweep", "--branch", "-1", "--grid", "log", "--lo", "-0.3", "--hi", "-1e-300", "--n", "20")
    assert code == 0
    assert all(float(r[3]) >= 14 for r in list(csv.reader(io.StringIO(text)))[1:])


def test_order_report():
    code, text = run("order", "--method", "fritsch", "--x", "1")
    assert code == 0
    exponent = float(text.split("fitted exponent")[1].split()[0])
    assert 3.6 <= exponent <= 4.4
    code, text = run("order", "--method", "halley")
    assert 2.7 <= float(text.split("fitted exponent")[1].split()[0]) <= 3.3


def test_order_fixed_point_at_e():
    code, text = run("order", "--method", "fritsch", "--x", str(math.e))
    ulps = float(text.split("moves")[1].split()[0])
    assert ulps <= 4


def test_gh_commands():
    assert run("gh-inverse", "--a", "1", "--xmax", "5") == (0, "5 5\n")
    code, text = run("gh-inverse", "--a", "0.5", "--xmax", "5", "--verify")
    roots, forward = text.splitlines()
    lo, hi = map(float, roots.split())
    assert lo < 5 < hi
    assert all(float(v) == pytest.approx(0.5, rel=1e-12) for v in forward.split())
    assert run("gh", "--x", "5", "--xmax", "5") == (0, "1\n")
    code, text = run("gh", "--x", "700", "--X0", "0", "--Xmax", "750", "--lambda", "70")
    assert 0 < float(text) < 1
    code, text = run("gh-inverse", "--a", "0.5", "--X0", "-100", "--Xmax", "750", "--lambda", "70")
    lo, hi = map(float, text.split())
    assert lo < 750 < hi


def test_gh_domain():
    assert run("gh-inverse", "--a", "2", "--xmax", "5")[0] == 2
    assert run("gh-inverse", "--a", "2", "--xmax", "5", "--nan-on-domain-error") == (0, "nan\n")


def test_moyal_commands():
    assert run("moyal-inverse", "--y", "0.60653065971263342") == (0, "0 0\n")
    assert run("moyal", "--x", "0") == (0, "0.6065306597126334\n")
    code, text = run("moyal-inverse", "--y", "0.3", "--side", "plus", "--verify")
    x, y = text.split()
    assert float(x) > 0 and float(y) == pytest.approx(0.3, abs=1e-12)
    code, text = run("moyal-inverse", "--y", "0.3")
    plus, minus = map(float, text.split())
    assert plus > 0 > minus
    assert run("moyal-inverse", "--y", "0.7")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "lambertw", "eval", "--branch", "-1", "-1e-300"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert float(proc.stdout) == lambert_w(-1, -1e-300).value
