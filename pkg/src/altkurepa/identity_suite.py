"""Series identities behind the Slavic-type formula, evaluated numerically.

f_n(z) = sum_{k>=2} (-1)^{k-1} (n+k-1)/(n+k)! z^k has a closed form in
terms of e^{-z}, equals the MacLaurin remainder of g(z) = (z+1)e^{-z}
divided by (-z)^n, and is dominated by the remainder of
h(t) = (t-1)e^t + 2 at t = |z|. Summing over n gives
F(z) = -e^{-z} - z + 1.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .complex_core import as_point
from .gamma_family import harmonic

# closed form of f_n is abandoned once its terms are this large (rounding
# then exceeds ~1e-13 absolute)
_CLOSED_FORM_MASS_LIMIT = 256.0


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    samples: int
    max_abs_residual: float
    max_rel_residual: float
    passed: bool


def make_report(identity_id: str, pairs, abs_tol: float, rel_tol: float = math.inf) -> IdentityReport:
    """Compare (lhs, rhs) pairs; a sample passes if either tolerance holds."""
    max_abs = 0.0
    max_rel = 0.0
    ok = True
    n = 0
    for lhs, rhs in pairs:
        n += 1
        d = abs(complex(lhs) - complex(rhs))
        scale = max(abs(lhs), abs(rhs))
        r = d / scale if scale > 0 else 0.0
        max_abs = max(max_abs, d)
        max_rel = max(max_rel, r)
        if not (d <= abs_tol or r <= rel_tol):
            ok = False
    return IdentityReport(identity_id, n, max_abs, max_rel, ok)


def _inv_fact(k: int) -> float:
    return 1.0 / math.factorial(k)


def f_n_series(n: int, z, terms: int = 60) -> complex:
    """Partial sum k = 2 .. terms+1 of (-1)^{k-1} (n+k-1)/(n+k)! z^k."""
    z = as_point(z)
    total = 0j
    zk = z * z
    for k in range(2, terms + 2):
        c = (n + k - 1) / math.factorial(n + k)
        total += (c if k % 2 else -c) * zk
        zk *= z
    return total


def _f_n_closed_terms(n: int, z: complex) -> tuple[complex, float]:
    parts = []
    for j in range(n + 2):
        c = (j - 1) * _inv_fact(j)
        if (j + n) % 2:
            c = -c
        parts.append(c * z ** (j - n))
    ez = cmath.exp(-z)
    tail = ez * (z ** (1 - n) + z ** (-n))
    parts.append(tail if n % 2 == 0 else -tail)
    mass = sum(abs(p) for p in parts)
    value = complex(math.fsum(p.real for p in parts), math.fsum(p.imag for p in parts))
    return value, mass


def f_n_closed_is_stable(n: int, z) -> bool:
    """Whether the closed form is used as is (no cancellation fallback)."""
    z = as_point(z)
    if abs(z) < 1e-2:
        return False
    return _f_n_closed_terms(n, z)[1] <= _CLOSED_FORM_MASS_LIMIT


def f_n_closed(n: int, z) -> complex:
    """Closed form sum_{j=0}^{n+1} (-1)^{j+n}(j-1)/j! z^{j-n} + (-1)^n e^{-z}(z^{1-n} + z^{-n}).

    Near z = 0 the z^{-n} terms cancel catastrophically; there the power
    series is returned instead.
    """
    if n < 1:
        raise ValueError("f_n is defined for n >= 1")
    z = as_point(z)
    if abs(z) < 1e-2:
        return f_n_series(n, z, 40)
    value, mass = _f_n_closed_terms(n, z)
    if mass > _CLOSED_FORM_MASS_LIMIT:
        return f_n_series(n, z, 60 + int(4 * abs(z)))
    return value


def _maclaurin_remainder(fz: complex, coef, order: int, z: complex) -> complex:
    poly = 0j
    zj = 1.0 + 0j
    for j in range(order + 1):
        poly += coef(j) * zj
        zj *= z
    return fz - poly


def _g_coef(j: int) -> float:
    # (z+1)e^{-z} = 1 + sum_{j>=1} (-1)^{j-1} (j-1)/j! z^j
    if j == 0:
        return 1.0
    c = (j - 1) * _inv_fact(j)
    return c if j % 2 == 1 else -c


def maclaurin_remainder_g(n_plus_1: int, z) -> complex:
    """g(z) minus its MacLaurin polynomial of degree n+1, g(z) = (z+1)e^{-z}."""
    z = as_point(z)
    return _maclaurin_remainder((z + 1.0) * cmath.exp(-z), _g_coef, n_plus_1, z)


def maclaurin_remainder_h(n_plus_1: int, t: float) -> float:
    """h(t) minus its MacLaurin polynomial of degree n+1, h(t) = (t-1)e^t + 2.

    h has coefficients (j-1)/j! for j >= 1, all positive, so the tail is
    summed directly.
    """
    return math.fsum((j - 1) * _inv_fact(j) * t**j for j in range(n_plus_1 + 1, n_plus_1 + 60))


def f_n_bound(n: int, rho: float) -> float:
    """e^rho (n+1+rho) rho^2 / (n+2)!, an upper bound for |f_n| on |z| < rho."""
    if n < 1 or not rho > 0:
        raise ValueError("need n >= 1 and rho > 0")
    return math.exp(rho) * (n + 1 + rho) * rho * rho / math.factorial(n + 2)


def big_f(z, n_terms: int = 60) -> complex:
    """Partial sum of f_1(z) + f_2(z) + ... + f_{n_terms}(z)."""
    z = as_point(z)
    if z == 0:
        return 0j
    parts = [f_n_closed(n, z) for n in range(1, n_terms + 1)]
    return complex(math.fsum(p.real for p in parts), math.fsum(p.imag for p in parts))


def big_f_closed(z) -> complex:
    z = as_point(z)
    return -cmath.exp(-z) - z + 1.0


def double_sum_lhs(z, n_terms: int = 60, k_terms: int = 60) -> complex:
    """(z+1) sum_{n=1}^{N} sum_{k=1}^{K} (-1)^k z^k / (k+n)!."""
    z = as_point(z)
    re_parts = []
    im_parts = []
    for n in range(1, n_terms + 1):
        zk = 1.0 + 0j
        for k in range(1, k_terms + 1):
            zk *= -z
            v = zk / math.factorial(k + n)
            re_parts.append(v.real)
            im_parts.append(v.imag)
    return (z + 1.0) * complex(math.fsum(re_parts), math.fsum(im_parts))


def double_sum_rhs(z) -> complex:
    z = as_point(z)
    return -cmath.exp(-z) + (1.0 - math.e) * z + 1.0


def telescoping_inner(k: int, n_terms: int = 25) -> float:
    """sum_{n=1}^{N} (-1)^{k-1} (n+k-1)/(n+k)!, which tends to (-1)^{k-1}/k!."""
    if k < 2:
        raise ValueError("k must be at least 2")
    s = math.fsum((n + k - 1) / math.factorial(n + k) for n in range(1, n_terms + 1))
    return s if k % 2 == 1 else -s


def interchange_sum(z, k_terms: int = 60, n_terms: int = 25) -> complex:
    """F(z) summed k-first: sum_k (inner sum over n) z^k."""
    z = as_point(z)
    total = 0j
    zk = z * z
    for k in range(2, k_terms + 2):
        total += telescoping_inner(k, n_terms) * zk
        zk *= z
    return total


def ramanujan_sides(x: float, n_terms: int) -> tuple[float, float]:
    """Both sides of sum H_n x^n/n! = e^x sum (-1)^{n-1} x^n/(n! n), truncated."""
    lhs = []
    rhs = []
    for n in range(1, n_terms + 1):
        xn_fact = x**n / math.factorial(n)
        lhs.append(harmonic(n) * xn_fact)
        rhs.append((1 if n % 2 else -1) * xn_fact / n)
    return math.fsum(lhs), math.exp(x) * math.fsum(rhs)


def ramanujan_check(x: float, n_terms: int = 60, tol: float = 1e-10) -> IdentityReport:
    if abs(x) > 5:
        raise ValueError("Ramanujan check is run for |x| <= 5")
    lhs, rhs = ramanujan_sides(x, n_terms)
    return make_report(f"ramanujan(x={x:g})", [(lhs, rhs)], tol)
