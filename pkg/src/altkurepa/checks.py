"""Seeded consistency suites: functional equation, cross-representation
agreement, singular structure and series identities.

Random points come from numpy's PCG64 generator seeded with the user's
seed, and are snapped to the dyadic grid 2**-40. On that grid z - 1 is
exact in binary floating point; without it the rounding of Re(z - 1)
alone moves A(z - 1) by up to pi*L2*|(-1)^z|*ulp, about 4e-8 near Im z = -6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import alt_kurepa as ak
from . import identity_suite as ids
from . import singular_structure as ss
from .complex_core import DEFAULT_CONFIG, EvalConfig, inv_sin_pi, pow_neg_one
from .gamma_family import gamma
from .special_aux import constant_L2

SUITES = ("fe", "repr", "pv", "identities")
GRID = 2.0**-40


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    samples: int
    max_residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tolerance

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{self.suite:<10} {self.name:<44} n={self.samples:<4d} "
            f"max={self.max_residual:.3e} tol={self.tolerance:.1e} {status}"
        )


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _snap(x: float) -> float:
    return round(x / GRID) * GRID


def _far_from_integers(z: complex, d_min: float) -> bool:
    return abs(z - round(z.real)) >= d_min


def sample_disk(rng, n: int, radius: float = 6.0, d_min: float = 0.1) -> list[complex]:
    """``n`` points uniform in |z| <= radius, at least ``d_min`` from the integers."""
    out = []
    while len(out) < n:
        r = radius * math.sqrt(rng.random())
        th = 2.0 * math.pi * rng.random()
        z = complex(_snap(r * math.cos(th)), _snap(r * math.sin(th)))
        if abs(z) <= radius and _far_from_integers(z, d_min):
            out.append(z)
    return out


def sample_box(rng, n: int, re_lo: float, re_hi: float, im_lo: float, im_hi: float, d_min: float = 0.1) -> list[complex]:
    out = []
    while len(out) < n:
        z = complex(_snap(rng.uniform(re_lo, re_hi)), _snap(rng.uniform(im_lo, im_hi)))
        if re_lo < z.real < re_hi and _far_from_integers(z, d_min):
            out.append(z)
    return out


def _rel(x: complex, y: complex) -> float:
    scale = max(abs(x), abs(y))
    return abs(x - y) / scale if scale > 0 else 0.0


def fe_suite(samples: int = 300, seed: int = 7, cfg: EvalConfig = DEFAULT_CONFIG) -> list[CheckResult]:
    rng = make_rng(seed)
    pts = sample_disk(rng, samples)
    worst_a = worst_a1 = 0.0
    for z in pts:
        g = gamma(z + 1.0)
        scale = 1.0 + abs(g)
        ra = abs(ak.a_eval(z, cfg=cfg).value + ak.a_eval(z - 1.0, cfg=cfg).value - g) / scale
        r1 = abs(ak.a1_eval(z, cfg=cfg).value + ak.a1_eval(z - 1.0, cfg=cfg).value - g) / scale
        worst_a = max(worst_a, ra)
        worst_a1 = max(worst_a1, r1)
    return [
        CheckResult("fe", "A(z)+A(z-1)-Gamma(z+1), scaled", samples, worst_a, 1e-8),
        CheckResult("fe", "A1(z)+A1(z-1)-Gamma(z+1), scaled", samples, worst_a1, 1e-8),
    ]


def repr_suite(samples: int = 100, seed: int = 1, cfg: EvalConfig = DEFAULT_CONFIG) -> list[CheckResult]:
    rng = make_rng(seed)
    right = sample_box(rng, samples, 0.0, 3.0, -2.0, 2.0)
    left = sample_box(rng, samples, -3.0, 0.0, -2.0, 2.0)
    w = dict.fromkeys(("IC", "IS", "CS", "RC", "RS", "CS2", "A1", "corr"), 0.0)
    l2 = constant_L2()
    for z in right:
        i = ak.a_integral(z, cfg).value
        c = ak.a_closed(z, cfg).value
        s = ak.a_slavic(z, cfg).value
        w["IC"] = max(w["IC"], _rel(i, c))
        w["IS"] = max(w["IS"], _rel(i, s))
        w["CS"] = max(w["CS"], _rel(c, s))
    for z in left:
        r = ak.a_recurrence(z, cfg).value
        c = ak.a_closed(z, cfg).value
        s = ak.a_slavic(z, cfg).value
        w["RC"] = max(w["RC"], _rel(r, c))
        w["RS"] = max(w["RS"], _rel(r, s))
        w["CS2"] = max(w["CS2"], _rel(c, s))
    for z in right + left:
        series = ak.a1_series(z, cfg).value
        w["A1"] = max(w["A1"], _rel(series, ak.a1_closed(z, cfg).value))
        expected = -l2 * pow_neg_one(z) + math.pi * math.e * inv_sin_pi(z)
        w["corr"] = max(w["corr"], abs(ak.a_slavic(z, cfg).value - series - expected))
    n2 = 2 * samples
    return [
        CheckResult("repr", "Integral vs ClosedForm, 0<Re z<3", samples, w["IC"], 1e-7),
        CheckResult("repr", "Integral vs Slavic, 0<Re z<3", samples, w["IS"], 1e-7),
        CheckResult("repr", "ClosedForm vs Slavic, 0<Re z<3", samples, w["CS"], 1e-7),
        CheckResult("repr", "Recurrence vs ClosedForm, -3<Re z<0", samples, w["RC"], 1e-7),
        CheckResult("repr", "Recurrence vs Slavic, -3<Re z<0", samples, w["RS"], 1e-7),
        CheckResult("repr", "ClosedForm vs Slavic, -3<Re z<0", samples, w["CS2"], 1e-7),
        CheckResult("repr", "A1 Series vs ClosedForm", n2, w["A1"], 1e-7),
        CheckResult("repr", "Slavic - A1 series = correction term", n2, w["corr"], 1e-8),
    ]


def pv_suite(cfg: EvalConfig = DEFAULT_CONFIG) -> list[CheckResult]:
    def a1(z):
        return ak.a1_closed(z, cfg).value

    def a(z):
        return ak.a_closed(z, cfg).value

    ms = range(-6, 7)
    res_a1 = max(abs(ss.residue_numeric(a1, m)[0] - ss.residue_a1(m)) for m in ms)
    pv_a1 = max(abs(ss.pv_contour(a1, m)[0] - ss.pv_a1(m)) for m in ms)
    res_a = max(abs(ss.residue_numeric(a, -n)[0] - ss.residue_a(n)) for n in range(2, 7))
    pv_g = max(abs(ss.pv_numeric(gamma, -n)[0] - ss.pv_gamma(-n)) for n in range(6))
    pv_a = max(abs(ss.pv_numeric(a, -n)[0] - ss.pv_a(-n)) for n in range(2, 7))
    l2 = constant_L2()
    diff = max(
        abs(ss.pv_contour(a1, m)[0] - ss.pv_contour(a, m)[0] - (l2 if m % 2 == 0 else -l2))
        for m in range(-6, 7)
    )
    fe_pv = max(
        abs(ss.pv_a(-n) + ss.pv_a(-n - 1) - ss.pv_gamma(-n + 1)) for n in range(2, 7)
    )
    return [
        CheckResult("pv", "contour residue of A1 vs closed form, m in [-6,6]", 13, res_a1, 1e-6),
        CheckResult("pv", "contour p.v. of A1 vs closed form, m in [-6,6]", 13, pv_a1, 1e-6),
        CheckResult("pv", "contour residue of A vs closed form, n in [2,6]", 5, res_a, 1e-6),
        CheckResult("pv", "symmetric-limit p.v. of Gamma, n in [0,5]", 6, pv_g, 1e-7),
        CheckResult("pv", "symmetric-limit p.v. of A, n in [2,6]", 5, pv_a, 1e-6),
        CheckResult("pv", "p.v. A1 - p.v. A = (-1)^m L2 (contours)", 13, diff, 1e-6),
        CheckResult("pv", "p.v. A(-n)+p.v. A(-n-1) = p.v. Gamma(1-n)", 5, fe_pv, 1e-12),
    ]


def identity_reports(seed: int = 7, samples: int = 200) -> list[ids.IdentityReport]:
    """Every series identity as an IdentityReport (residual tolerance 1e-10)."""
    rng = make_rng(seed)
    pts = [z for z in sample_disk(rng, samples, radius=3.0, d_min=0.0) if z != 0]
    reports = []
    reports.append(
        ids.make_report(
            "F(z) = -e^-z - z + 1 (n-first)",
            [(ids.big_f(z, 60), ids.big_f_closed(z)) for z in pts[:50]],
            1e-10,
        )
    )
    reports.append(
        ids.make_report(
            "F(z) summed k-first",
            [(ids.interchange_sum(z), ids.big_f_closed(z)) for z in pts[:50]],
            1e-10,
        )
    )
    reports.append(
        ids.make_report(
            "double sum = -e^-z + (1-e) z + 1",
            [(ids.double_sum_lhs(z), ids.double_sum_rhs(z)) for z in pts[:30]],
            1e-10,
        )
    )
    reports.append(
        ids.make_report(
            "telescoping inner sums, k in [2,30]",
            [(ids.telescoping_inner(k), (-1) ** (k - 1) / math.factorial(k)) for k in range(2, 31)],
            1e-12,
        )
    )
    for x in (1.0, -2.0, 0.5):
        reports.append(ids.ramanujan_check(x, 60))
    ns = [1 + (i % 10) for i in range(len(pts))]
    reports.append(
        ids.make_report(
            "f_n closed form = series (n<=10, |z|<=3)",
            [(ids.f_n_closed(n, z), ids.f_n_series(n, z, 80)) for n, z in zip(ns, pts)],
            1e-10,
        )
    )
    reports.append(
        ids.make_report(
            "f_n (-z)^n = remainder of (z+1)e^-z",
            [(ids.f_n_closed(n, z) * (-z) ** n, ids.maclaurin_remainder_g(n + 1, z)) for n, z in zip(ns, pts)],
            1e-10,
        )
    )
    violations = 0
    count = 0
    for rho in (1.0, 2.0, 3.0):
        for n in range(1, 16):
            for z in pts[:100]:
                zz = z * (rho / 3.0)
                if abs(zz) >= rho:
                    continue
                count += 1
                if abs(ids.f_n_closed(n, zz)) > ids.f_n_bound(n, rho):
                    violations += 1
    reports.append(ids.IdentityReport("|f_n| <= e^rho (n+1+rho) rho^2/(n+2)!", count, float(violations), 0.0, violations == 0))
    chain = []
    for n, z in zip(ns, pts):
        t = abs(z)
        chain.append(max(0.0, abs(ids.f_n_closed(n, z)) - ids.maclaurin_remainder_h(n + 1, t) / t**n))
    worst = max(chain)
    reports.append(ids.IdentityReport("|f_n(z)| <= R_{n+1}(h)(|z|)/|z|^n", len(chain), worst, 0.0, worst <= 1e-12))
    return reports


def identities_suite(seed: int = 7) -> list[CheckResult]:
    out = []
    for r in identity_reports(seed):
        if r.identity_id.startswith("|f_n| <="):
            out.append(CheckResult("identities", r.identity_id + " [violations]", r.samples, r.max_abs_residual, 0.0))
        elif r.identity_id.startswith("|f_n(z)| <="):
            out.append(CheckResult("identities", r.identity_id, r.samples, r.max_abs_residual, 1e-12))
        else:
            tol = 1e-12 if r.identity_id.startswith("telescoping") else 1e-10
            out.append(CheckResult("identities", r.identity_id, r.samples, r.max_abs_residual, tol))
    return out


def run_suite(name: str, samples: int | None = None, seed: int = 7, cfg: EvalConfig = DEFAULT_CONFIG) -> list[CheckResult]:
    if name == "fe":
        return fe_suite(samples or 300, seed, cfg)
    if name == "repr":
        return repr_suite(samples or 100, seed, cfg)
    if name == "pv":
        return pv_suite(cfg)
    if name == "identities":
        return identities_suite(seed)
    if name == "all":
        out = []
        for s in SUITES:
            out.extend(run_suite(s, samples, seed, cfg))
        return out
    raise ValueError(f"unknown suite {name!r}")
