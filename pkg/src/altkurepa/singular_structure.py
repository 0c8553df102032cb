"""Residues and principal values at integer points.

Closed forms for A, A1 and Gamma, plus three generic numerical evaluators
used to check them: the symmetric limit (f(a-eps) + f(a+eps))/2 with
Richardson extrapolation in eps**2, and trapezoidal rules on small circles
for the contour mean (1/2 pi i) \\oint f(z)/(z-a) dz and the residue.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .alt_kurepa import _exact_a
from .errors import DomainError, NoConvergence
from .gamma_family import gamma_ratio
from .special_aux import constant_L2

FUNCTIONS = ("A", "A1", "Gamma")


@dataclass(frozen=True)
class SingularityInfo:
    location: int
    order: int
    residue: complex
    principal_value: complex
    function_id: str

    def __post_init__(self):
        if self.order not in (0, 1):
            raise ValueError("only regular points and simple poles occur")
        if self.order == 0 and self.residue != 0:
            raise ValueError("a regular point has zero residue")
        if self.order == 1 and self.residue == 0:
            raise ValueError("a simple pole has a non-zero residue")


def residue_a(n: int) -> float:
    """res_{z=-n} A(z) = (-1)^n sum_{k=0}^{n-2} 1/k!, n >= 2."""
    if n < 2:
        raise DomainError(f"A is regular at z = {-n}; residues exist only for n >= 2")
    s = math.fsum(1.0 / math.factorial(k) for k in range(n - 1))
    return s if n % 2 == 0 else -s


def residue_a1(m: int) -> float:
    """res_{z=m} A1(z) = (-1)^{m-1} e + res_{z=m} A(z)."""
    r = math.e if (m - 1) % 2 == 0 else -math.e
    if -m >= 2:
        r += residue_a(-m)
    return r


def pv_gamma(minus_n: int) -> float:
    """p.v. of Gamma at -n (n >= 0): (-1)^n (H_n - euler_gamma)/n!."""
    if minus_n > 0:
        raise DomainError(f"Gamma is regular at {minus_n}")
    n = -minus_n
    r = gamma_ratio(n)
    return r if n % 2 == 0 else -r


def pv_a(minus_n: int) -> float:
    """p.v. of A at an integer; A's value where it is regular (n >= -1)."""
    if minus_n >= -1:
        return float(_exact_a(minus_n))
    n = -minus_n
    s = 1.0 - math.fsum(gamma_ratio(i - 1) for i in range(1, n))
    return s if (n + 1) % 2 == 0 else -s


def pv_a1(n: int) -> float:
    """p.v. of A1 at an integer n: (-1)^n L2 + p.v. A(n)."""
    l2 = constant_L2()
    return (l2 if n % 2 == 0 else -l2) + pv_a(n)


def singularity_info(function_id: str, m: int) -> SingularityInfo:
    if function_id == "A":
        if m <= -2:
            return SingularityInfo(m, 1, residue_a(-m), pv_a(m), "A")
        return SingularityInfo(m, 0, 0.0, pv_a(m), "A")
    if function_id == "A1":
        return SingularityInfo(m, 1, residue_a1(m), pv_a1(m), "A1")
    if function_id == "Gamma":
        if m <= 0:
            n = -m
            res = (1.0 if n % 2 == 0 else -1.0) / math.factorial(n)
            return SingularityInfo(m, 1, res, pv_gamma(m), "Gamma")
        return SingularityInfo(m, 0, 0.0, float(math.factorial(m - 1)), "Gamma")
    raise DomainError(f"unknown function {function_id!r}; expected one of {FUNCTIONS}")


# -- numerical evaluators -------------------------------------------------

def _call(f, z: complex) -> complex:
    out = f(z)
    return complex(getattr(out, "value", out))


def pv_numeric(f, a: int, levels: int = 6, eps0: float = 0.1) -> tuple[complex, float]:
    """Symmetric-limit principal value at ``a`` with Richardson extrapolation.

    Averages at eps_k = eps0 / 2**k are even in eps, so the tableau
    eliminates eps**2, eps**4, ... Returns (value, estimated error).
    """
    if levels < 2:
        raise ValueError("need at least two levels")
    rows = []
    for k in range(levels):
        e = eps0 / 2**k
        row = [0.5 * (_call(f, a - e) + _call(f, a + e))]
        for j in range(1, k + 1):
            fac = 4.0**j
            row.append(row[j - 1] + (row[j - 1] - rows[k - 1][j - 1]) / (fac - 1.0))
        rows.append(row)
    best = rows[-1][-1]
    last = abs(best - rows[-1][-2])
    prev = abs(rows[-2][-1] - rows[-2][-2]) if levels > 2 else math.inf
    if last > prev and last > 1e-3 * (1.0 + abs(best)):
        raise NoConvergence(f"symmetric-limit extrapolation diverges at {a}")
    return best, last


def _circle_mean(f, a: int, radius: float, nodes: int, weight_power: int) -> complex:
    acc_re = []
    acc_im = []
    for j in range(nodes):
        w = cmath.exp(2j * math.pi * j / nodes)
        v = _call(f, a + radius * w) * w**weight_power
        acc_re.append(v.real)
        acc_im.append(v.imag)
    return complex(math.fsum(acc_re), math.fsum(acc_im)) / nodes


def pv_contour(f, a: int, radius: float = 0.2, nodes: int = 64) -> tuple[complex, float]:
    """Contour mean (1/2 pi i) \\oint f(z)/(z-a) dz on |z-a| = radius and
    radius/2, extrapolated linearly to radius 0. Returns (value, error)."""
    if not 0 < radius < 0.5:
        raise DomainError("contour radius must lie in (0, 0.5)")
    m1 = _circle_mean(f, a, radius, nodes, 0)
    m2 = _circle_mean(f, a, radius / 2, nodes, 0)
    err = abs(m1 - m2)
    if err > 1e-4 * (1.0 + abs(m2)):
        raise NoConvergence(f"contour mean at {a} depends on the radius (another singularity inside?)")
    return 2.0 * m2 - m1, err


def residue_numeric(f, a: int, radius: float = 0.2, nodes: int = 64) -> tuple[complex, float]:
    """(1/2 pi i) \\oint f dz on |z-a| = radius; checked again at radius/2."""
    if not 0 < radius < 0.5:
        raise DomainError("contour radius must lie in (0, 0.5)")
    r1 = radius * _circle_mean(f, a, radius, nodes, 1)
    r2 = 0.5 * radius * _circle_mean(f, a, radius / 2, nodes, 1)
    err = abs(r1 - r2)
    if err > 1e-4 * (1.0 + abs(r2)):
        raise NoConvergence(f"residue at {a} depends on the radius (another singularity inside?)")
    return r2, err


def pv_product_rule(f1, f2_pv: complex, f2_res: complex, a: int, f1_prime=None, step: float = 1e-5) -> complex:
    """p.v. of f1*f2 at a simple pole of f2: f1(a) p.v. f2 + f1'(a) res f2."""
    if f1_prime is None:
        d = (_call(f1, a + step) - _call(f1, a - step)) / (2.0 * step)
    else:
        d = complex(f1_prime)
    return _call(f1, a) * f2_pv + d * f2_res
