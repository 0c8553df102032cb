"""Acceptance criteria, each run at its stated tolerance and time budget.

Every test prints one PASS/FAIL line. Run ``python tests/test_acceptance.py``
for the lines alone; under pytest they appear in the terminal summary.
"""

import subprocess
import sys
import time

from altkurepa import checks
from altkurepa import singular_structure as ss
from altkurepa.alt_kurepa import a_closed, a_integer_oracle, a_integral
from altkurepa.special_aux import constant_L2, l2_via_alternating_series, l2_via_gamma_ratio

L2_STATED = 0.403652377

# collected for the pytest terminal summary (see conftest.py)
LINES = []


def report(number, title, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}  ({detail})"
    LINES.append(line)
    print(line)
    return ok


def timed(fn):
    t0 = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - t0


def _results_ok(results):
    return all(r.passed for r in results), max((r.max_residual / r.tolerance if r.tolerance else r.max_residual) for r in results)


def test_criterion_1_constant_l2():
    routes, dt = timed(lambda: [constant_L2.__wrapped__(), l2_via_gamma_ratio(), l2_via_alternating_series()])
    worst = max(abs(v - L2_STATED) for v in routes)
    spread = max(routes) - min(routes)
    ok = worst <= 5e-9 and dt < 0.1
    detail = f"max |route - {L2_STATED}| = {worst:.3e}, route spread {spread:.1e}, {dt:.3f}s"
    assert report(1, "L2 routes equal 0.403652377 within 5e-9", ok, detail)


def test_criterion_2_integer_agreement():
    def run():
        worst = 0.0
        for n in range(1, 13):
            exact = a_integer_oracle(n)
            for value in (a_integral(n).value, a_closed(n).value):
                worst = max(worst, abs(value - exact) / exact)
        return worst

    worst, dt = timed(run)
    oracle_ok = [a_integer_oracle(n) for n in range(1, 7)] == [1, 1, 5, 19, 101, 619]
    ok = worst <= 1e-6 and oracle_ok and dt < 1.0
    assert report(2, "Integral and ClosedForm match the integer oracle, n=1..12", ok, f"max rel {worst:.2e}, {dt:.3f}s")


def test_criterion_3_functional_equation():
    results, dt = timed(lambda: checks.fe_suite(300, seed=7))
    ok, _ = _results_ok(results)
    ok = ok and dt < 2.0
    detail = ", ".join(f"{r.name.split('(')[0]} {r.max_residual:.2e}" for r in results) + f", {dt:.3f}s"
    assert report(3, "functional equation for A and A1 on 300 seeded points", ok, detail)


def test_criterion_4_cross_representation():
    results, dt = timed(lambda: checks.repr_suite(100, seed=1))
    pairwise = [r for r in results if " vs " in r.name and r.name.startswith(("Integral", "ClosedForm", "Recurrence"))]
    ok = all(r.passed for r in pairwise) and dt < 5.0
    worst = max(r.max_residual for r in pairwise)
    assert report(4, "pairwise representation agreement <= 1e-7", ok, f"max rel {worst:.2e} over {len(pairwise)} pairs, {dt:.3f}s")


def test_criterion_5_singular_structure():
    def run():
        return [r for r in checks.pv_suite() if not r.name.startswith(("p.v. A1 - p.v. A", "p.v. A(-n)+", "symmetric-limit p.v. of A,"))]

    results, dt = timed(run)
    ok = all(r.passed for r in results) and dt < 3.0
    worst = max(r.max_residual for r in results)
    assert report(5, "numeric residues and p.v. match closed forms", ok, f"max abs {worst:.2e}, {dt:.3f}s")


def test_criterion_6_identity_suite():
    results, dt = timed(checks.identities_suite)
    ok = all(r.passed for r in results) and dt < 5.0
    worst = max(r.max_residual for r in results if "violations" not in r.name)
    violations = sum(int(r.max_residual) for r in results if "violations" in r.name)
    assert report(6, "series identities <= 1e-10, zero bound violations", ok, f"max {worst:.2e}, violations {violations}, {dt:.3f}s")


def test_criterion_7_pv_functional_equation():
    worst = max(abs(ss.pv_a(-n) + ss.pv_a(-n - 1) - ss.pv_gamma(-n + 1)) for n in range(2, 7))
    assert report(7, "p.v. A(-n) + p.v. A(-n-1) = p.v. Gamma(1-n), n=2..6", worst <= 1e-12, f"max {worst:.2e}")


def test_criterion_8_cli_determinism():
    cmd = [sys.executable, "-m", "altkurepa", "check", "--suite", "all", "--seed", "7"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    ok = first.returncode == 0 and second.returncode == 0 and first.stdout == second.stdout and first.stdout
    detail = f"exit codes {first.returncode}/{second.returncode}, {len(first.stdout)} bytes, identical={first.stdout == second.stdout}"
    assert report(8, "`check --suite all --seed 7` twice is byte-identical, exit 0", bool(ok), detail)


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
