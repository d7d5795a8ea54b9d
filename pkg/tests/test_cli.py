import json
import subprocess
import sys

import pytest

from htpval.cli import EXIT_FAIL, EXIT_PASS, EXIT_USAGE, main
from htpval.report import RunReport


def run_json(capsys, *argv):
    code = main([*argv, "--format", "json"])
    return code, RunReport.from_json(capsys.readouterr().out)


def test_xy_asymptotics(capsys):
    code, report = run_json(capsys, "xy-asymptotics", "--curve", "0,1,1", "--nmax", "6")
    assert code == EXIT_PASS
    assert len(report.checks) == 12 and report.passed


def test_zxz_verify(capsys):
    code, report = run_json(capsys, "zxz-verify", "--range", "12", "--box", "41")
    assert code == EXIT_PASS
    assert report.parameters["box"] == 41
    assert any("discrepancies" in c.description and c.actual == 0 for c in report.checks)


def test_unknown_subcommand(capsys):
    assert main(["unknown-cmd"]) == EXIT_USAGE
    err = capsys.readouterr().err
    assert "usage:" in err and "unknown suite" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["divform-g", "--m", "2"],
        ["divform-g", "--lambda", "0"],
        ["divform-g", "--lambda", "1/0"],
        ["xy-asymptotics", "--curve", "0,0,0"],
        ["xy-asymptotics", "--curve", "1,2"],
        ["zxz-verify", "--range", "0"],
        ["qf-isotropy", "--form", "1,x"],
        ["qf-isotropy", "--format", "yaml"],
        ["divform-ledger", "--curve", "0,1,0"],
    ],
)
def test_parameter_errors_exit_2(argv, capsys):
    assert main(argv) == EXIT_USAGE
    assert capsys.readouterr().err


def test_single_form(capsys):
    code, report = run_json(capsys, "qf-isotropy", "--form", "1,1,1,-7")
    assert code == EXIT_PASS
    assert report.checks[0].actual == "anisotropic"
    code, report = run_json(capsys, "qf-isotropy", "--form", "1,-T^2")
    assert code == EXIT_PASS and report.checks[0].actual != "none found"


def test_seed_is_recorded_and_deterministic(capsys):
    _, a = run_json(capsys, "qf-residue-check", "--samples", "20", "--seed", "11")
    _, b = run_json(capsys, "qf-residue-check", "--samples", "20", "--seed", "11")
    assert a.parameters["seed"] == 11
    assert [c.actual for c in a.checks] == [c.actual for c in b.checks]


def test_failure_exit_code(monkeypatch, capsys):
    from htpval import suites

    def failing(*args, **kwargs):
        r = RunReport("cusp-check")
        r.add("forced", 1, 2, False)
        return r

    monkeypatch.setattr(suites, "cusp_check", failing)
    assert main(["cusp-check"]) == EXIT_FAIL
    assert "FAIL" in capsys.readouterr().out


def test_text_format(capsys):
    assert main(["cusp-check", "--nmax", "3"]) == EXIT_PASS
    out = capsys.readouterr().out
    assert out.startswith("suite: cusp-check") and "6/6 checks passed" in out


def test_ledger_report_lists_orders(capsys):
    code, report = run_json(capsys, "divform-ledger", "--m", "1")
    assert code == EXIT_PASS
    text = " ".join(c.description for c in report.checks)
    assert "sign branch" in text and "w(y(P3))" in text


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "htpval.cli", "valuation-axioms", "--samples", "50", "--format", "json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["passed"] is True
    proc = subprocess.run([sys.executable, "-m", "htpval.cli", "nope"], capture_output=True, text=True, check=False)
    assert proc.returncode == 2
