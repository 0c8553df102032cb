import csv
import io
import json
import subprocess
import sys

import pytest

from altkurepa import cli


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


class TestEval:
    def test_integer(self):
        code, text = run("eval", "--function", "A", "--re", "4", "--im", "0")
        assert code == 0
        assert text.splitlines()[0] == "z_re,z_im,value_re,value_im,err_est,method"
        r = rows(text)[0]
        assert float(r["value_re"]) == 19.0 and float(r["err_est"]) <= 1e-8

    def test_minus_one(self):
        code, text = run("eval", "--function", "A", "--re", "-1", "--im", "0", "--format", "json")
        assert code == 0
        assert json.loads(text)[0]["value_re"] == 1.0

    def test_pole_exit_code(self, capsys):
        code, _ = run("eval", "--function", "A1", "--re", "1", "--im", "0")
        assert code == 2
        assert "pv" in capsys.readouterr().err

    def test_domain_error(self):
        code, _ = run("eval", "--re", "-0.5", "--method", "Integral")
        assert code == 2

    def test_usage_errors(self):
        assert run("eval")[0] == 1
        assert run("nonsense")[0] == 1
        assert run("eval", "--re", "x")[0] == 1
        assert run("eval", "--re", "1.5", "--tol", "-1")[0] == 1

    def test_env_tolerance(self, monkeypatch):
        monkeypatch.setenv("ALTFACT_TOL", "1e-9")
        code, text = run("eval", "--re", "2.5", "--im", "1", "--method", "Integral")
        assert code == 0
        monkeypatch.setenv("ALTFACT_TOL", "abc")
        assert run("eval", "--re", "2.5")[0] == 1


class TestPoles:
    def test_a(self):
        code, text = run("poles", "--function", "A", "--m-min", "-4", "--m-max", "-2")
        assert code == 0
        assert [float(r["residue"]) for r in rows(text)] == [2.5, -2.0, 1.0]

    def test_a1(self):
        _, text = run("poles", "--function", "A1", "--m-min", "0", "--m-max", "1", "--format", "json")
        data = json.loads(text)
        assert data[0]["residue"] == pytest.approx(-2.718281828459045)
        assert data[1]["residue"] == pytest.approx(2.718281828459045)
        assert data[0]["principal_value"] + data[1]["principal_value"] == pytest.approx(1.0)

    def test_gamma(self):
        _, text = run("poles", "--function", "Gamma", "--m-min", "0", "--m-max", "0")
        r = rows(text)[0]
        assert float(r["residue"]) == 1.0
        assert float(r["principal_value"]) == pytest.approx(-0.5772156649015329)

    def test_bad_range(self):
        assert run("poles", "--m-min", "3", "--m-max", "1")[0] == 1


class TestGrid:
    def test_shape(self):
        code, text = run("grid", "--function", "A", "--re-min", "0.1", "--re-max", "3", "--step", "0.1")
        assert code == 0
        data = rows(text)
        assert len(data) == 30
        res = [float(r["z_re"]) for r in data]
        assert res == sorted(res)
        assert not any(r["skipped"] for r in data)

    def test_a1_skips_zero(self):
        _, text = run("grid", "--function", "A1", "--re-min", "-0.9", "--re-max", "0.9", "--step", "0.1")
        skipped = [r for r in rows(text) if r["skipped"]]
        assert [(r["z_re"], r["skipped"]) for r in skipped] == [("0.0", "pole")]

    def test_json_round_trip(self):
        _, text = run(
            "grid", "--function", "A1", "--re-min", "-0.5", "--re-max", "0.5",
            "--im-min", "-0.2", "--im-max", "0.2", "--step", "0.25", "--format", "json",
        )
        data = json.loads(text)
        assert json.loads(json.dumps(data, indent=1)) == data
        assert json.dumps(data, indent=1) + "\n" == text
        # row-major: imaginary part is the outer loop
        ims = [r["z_im"] for r in data]
        assert ims == sorted(ims)

    def test_workers_same_output(self):
        args = ("grid", "--function", "A", "--re-min", "-2.5", "--re-max", "2.5", "--im-min", "0", "--im-max", "1", "--step", "0.5")
        assert run(*args)[1] == run(*args, "--workers", "2")[1]

    def test_bad_step(self):
        assert run("grid", "--re-min", "0", "--re-max", "1", "--step", "0")[0] == 1
        assert run("grid", "--re-min", "2", "--re-max", "1", "--step", "0.1")[0] == 1


class TestCheckAndMisc:
    def test_check_suites(self):
        for suite, extra in (("fe", ["--samples", "300", "--seed", "7"]), ("identities", []), ("repr", ["--samples", "100", "--seed", "1"])):
            code, text = run("check", "--suite", suite, *extra)
            assert code == 0, text
            assert "FAIL" not in text

    def test_check_failure_exit_code(self, monkeypatch):
        from altkurepa import checks

        bad = checks.CheckResult("fe", "forced", 1, 1.0, 0.0)
        monkeypatch.setattr(checks, "run_suite", lambda *a, **k: [bad])
        assert run("check", "--suite", "fe")[0] == 3

    def test_constants(self):
        code, text = run("constants")
        assert code == 0
        for name in ("euler_gamma", "L2", "gompertz"):
            assert name in text

    def test_pv_and_residue(self):
        code, text = run("pv", "--function", "A1", "--m", "0")
        assert code == 0 and "principal_value_closed=0.4036526" in text
        code, text = run("residue", "--function", "A", "--m", "-3")
        assert code == 0 and "residue_closed=-2.0" in text

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "altkurepa", "eval", "--re", "3"], capture_output=True, text=True
        )
        assert proc.returncode == 0
        assert rows(proc.stdout)[0]["value_re"] == "5.0"
