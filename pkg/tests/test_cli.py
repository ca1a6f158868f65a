import csv
import io
import json
import subprocess
import sys

import pytest

from heckechar.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize(
    "lam,mu,expected",
    [("3,2,1", "4,2", "-q^3+2q^2-q"), ("2,1", "2,1", "q-1"), ("1", "1", "1"), ("-", "-", "1")],
)
def test_value(lam, mu, expected):
    assert run("value", "--lambda", lam, "--mu", mu) == (0, expected + "\n")


def test_value_json_with_check():
    code, out = run("value", "--lambda", "3,2,1", "--mu", "4,2", "--format", "json", "--check")
    assert code == 0
    assert json.loads(out) == {
        "lambda": "3,2,1", "mu": "4,2", "value": "-q^3+2q^2-q", "oracle_match": True
    }


def test_value_reorders_with_warning(capsys):
    code, out = run("value", "--lambda", "1,2", "--mu", "3")
    assert (code, out) == (0, "-q\n")
    assert "reordered" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ("value", "--lambda", "x", "--mu", "1"),
        ("value", "--lambda", "2", "--mu", "1"),
        ("value", "--lambda", "0", "--mu", "-"),
        ("table", "--n", "13"),
        ("table", "--n", "-1"),
        ("verify", "--suite", "bogus"),
        ("verify", "--suite", "oracle", "--max-n", "99"),
        ("frobnicate",),
        (),
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_table_csv_n2():
    code, out = run("table", "--n", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["lambda\\mu", "2", "1,1"], ["2", "q", "1"], ["1,1", "-1", "1"]]


def test_table_json():
    assert json.loads(run("table", "--n", "0", "--format", "json")[1])["values"] == [["1"]]
    obj = json.loads(run("table", "--n", "3", "--format", "json")[1])
    assert obj["values"][obj["rows"].index("2,1")][obj["cols"].index("3")] == "-q"


def test_table_methods_agree():
    assert run("table", "--n", "5", "--method", "dual")[1] == run("table", "--n", "5", "--method", "oracle")[1]


def test_table_latex():
    code, out = run("table", "--n", "3", "--format", "latex")
    assert code == 0
    assert out.startswith("\\begin{tabular}{c|ccc}")
    assert "$(2,1)$ & $-q$ & $q-1$ & $2$ \\\\" in out
    assert out.rstrip().endswith("\\end{tabular}")


def test_latex_braces_long_exponents(monkeypatch):
    code, out = run("table", "--n", "5", "--format", "latex")
    assert "$q^4$" in out
    from heckechar.cli import _latex_poly
    assert _latex_poly("q^12-q^3") == "q^{12}-q^3"


def test_max_n_env(monkeypatch):
    monkeypatch.setenv("HECKE_MAX_N", "3")
    assert run("table", "--n", "4")[0] == 2
    assert run("table", "--n", "3")[0] == 0
    monkeypatch.setenv("HECKE_MAX_N", "nope")
    assert run("table", "--n", "1")[0] == 2


def test_verify_oracle_report():
    code, out = run("verify", "--suite", "oracle", "--max-n", "5")
    assert code == 0
    assert "[oracle] PASS: 89 instances" in out
    assert "[n=5]: 49 checked" in out


@pytest.mark.parametrize("suite", ["q1", "lemma", "prop23", "commutation", "straightening"])
def test_verify_suites_small(suite):
    code, out = run("verify", "--suite", suite, "--max-n", "3")
    assert code == 0 and "FAIL" not in out


def test_verify_failure_exit_1(monkeypatch):
    from heckechar import verify
    from heckechar.verify import Check

    monkeypatch.setitem(verify.SUITES, "oracle", (lambda n: [Check("broken", 0, 1, ["x"])], 1))
    code, out = run("verify", "--suite", "oracle")
    assert code == 1 and "FAIL" in out


def test_bench_json():
    code, out = run("bench", "--n", "4", "--method", "dual", "--repeat", "3")
    report = json.loads(out)
    assert code == 0
    assert report["cells"] == 25 and report["repeat"] == 3 and len(report["runs_s"]) == 3
    assert report["elapsed_s"] == sorted(report["runs_s"])[1]
    assert json.loads(run("bench", "--n", "3", "--method", "oracle")[1])["cells"] == 9


@pytest.mark.slow
@pytest.mark.parametrize("method", ["dual", "oracle"])
def test_bench_n8_cells(method):
    assert json.loads(run("bench", "--n", "8", "--method", method)[1])["cells"] == 484


def test_deterministic_output():
    a = run("table", "--n", "4", "--format", "csv")
    b = run("table", "--n", "4", "--format", "csv")
    assert a == b


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "heckechar", "value", "--lambda", "3,2,1", "--mu", "4,2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "-q^3+2q^2-q\n"
    bad = subprocess.run([sys.executable, "-m", "heckechar", "table", "--n", "x"],
                         capture_output=True, text=True, check=False)
    assert bad.returncode == 2
