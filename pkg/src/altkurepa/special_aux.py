"""Exponential integral on the negative axis, incomplete gamma functions
with complex parameter, and the constants L2 and Gompertz.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .complex_core import DEFAULT_CONFIG, EvalConfig, as_point, check_pole_guard
from .errors import DomainError, NoConvergence
from .gamma_family import EULER_GAMMA, gamma, gamma_ratio

_TINY = 1e-300
_EPS = 2.220446049250313e-16
EI_SERIES_CUTOFF = -4.0


def _e1_continued_fraction(t: float, max_terms: int) -> float:
    # E1(t) = exp(-t) / (t+1 - 1/(t+3 - 4/(t+5 - ...))), modified Lentz
    b = t + 1.0
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, max_terms + 1):
        an = -float(i * i)
        b += 2.0
        d = 1.0 / (an * d + b)
        c = b + an / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < _EPS:
            return h * math.exp(-t)
    raise NoConvergence(f"E1 continued fraction did not converge at t={t}")


def ei_negative(x: float, max_terms: int = 200) -> float:
    """Ei(x) = integral of e^t/t over (-inf, x], for x < 0."""
    x = float(x)
    if not x < 0:
        raise DomainError(f"ei_negative needs x < 0, got {x!r}")
    if x > EI_SERIES_CUTOFF:
        # Ei(x) = gamma + ln|x| + sum x^k / (k k!)
        term = 1.0
        parts = [EULER_GAMMA, math.log(-x)]
        for k in range(1, max_terms + 1):
            term *= x / k
            contrib = term / k
            parts.append(contrib)
            if abs(contrib) < _EPS * 1e-2:
                return math.fsum(parts)
        raise NoConvergence(f"Ei series did not converge at x={x}")
    return -_e1_continued_fraction(-x, max_terms)


def _prefactor(a: complex, x: float) -> complex:
    # x^a e^{-x} on the principal branch (x > 0 real)
    return cmath.exp(a * math.log(x) - x)


def _upper_cf(a: complex, x: float, tol: float, max_terms: int) -> tuple[complex, int]:
    # Legendre continued fraction, converges for every a when x > 0
    b = x + 1.0 - a
    c = 1.0 / _TINY
    d = 1.0 / b if b != 0 else 1.0 / _TINY
    h = d
    for i in range(1, max_terms + 1):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < tol:
            return _prefactor(a, x) * h, i
    raise NoConvergence(
        f"upper incomplete gamma continued fraction: no convergence in {max_terms} terms (a={a}, x={x})"
    )


def _lower_series(a: complex, x: float, tol: float, max_terms: int) -> tuple[complex, int]:
    term = 1.0 / a
    total = term
    for k in range(1, max_terms + 1):
        term *= x / (a + k)
        total += term
        if abs(term) < tol * abs(total):
            return _prefactor(a, x) * total, k
    raise NoConvergence(
        f"lower incomplete gamma series: no convergence in {max_terms} terms (a={a}, x={x})"
    )


def _check_x(x) -> float:
    x = float(x)
    if not (x > 0 and math.isfinite(x)):
        raise DomainError(f"incomplete gamma needs real x > 0, got {x!r}")
    return x


def upper_incomplete_gamma(a, x, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Gamma(a, x) = integral of e^{-t} t^{a-1} over [x, inf), complex a, x > 0.

    Uses the continued fraction where it converges quickly (Re a <= x + 1)
    and Gamma(a) - gamma(a, x) beyond, where the power series is cheap and
    the subtraction is well conditioned.
    """
    return upper_incomplete_gamma_info(a, x, cfg)[0]


def upper_incomplete_gamma_info(a, x, cfg: EvalConfig = DEFAULT_CONFIG) -> tuple[complex, float, int]:
    """As :func:`upper_incomplete_gamma`, also returning (abs error estimate, terms)."""
    a = as_point(a)
    x = _check_x(x)
    tol = max(cfg.tol_rel / 10.0, _EPS)
    if a.real > x + 1.0:
        low, n = _lower_series(a, x, tol, cfg.max_terms)
        full = gamma(a, cfg.pole_guard_radius)
        value = full - low
        err = 4 * _EPS * (abs(full) + abs(low)) + tol * abs(low)
        return value, err, n
    value, n = _upper_cf(a, x, tol, cfg.max_terms)
    return value, (tol + 4 * n * _EPS) * abs(value), n


def lower_incomplete_gamma(a, x, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """gamma(a, x) by its power series; refuses a near 0, -1, -2, ..."""
    a = as_point(a)
    x = _check_x(x)
    check_pole_guard(a, cfg.pole_guard_radius, lambda m: m <= 0, "lower incomplete gamma")
    value, _ = _lower_series(a, x, max(cfg.tol_rel / 10.0, _EPS), cfg.max_terms)
    return value


@dataclass(frozen=True)
class NamedConstant:
    name: str
    value: float
    definition: str
    anchor: str


def _alternating_inverse_factorial_sum() -> float:
    # sum_{n>=1} (-1)^{n-1} / (n! n)
    parts = []
    inv_fact = 1.0
    for n in range(1, 40):
        inv_fact /= n
        parts.append((-1) ** (n - 1) * inv_fact / n)
    return math.fsum(parts)


@lru_cache(maxsize=None)
def constant_L2() -> float:
    """L2 = 1 + e Ei(-1)."""
    return 1.0 + math.e * ei_negative(-1.0)


@lru_cache(maxsize=None)
def constant_gompertz() -> float:
    """Gompertz constant -e Ei(-1) = integral of e^{-t}/(1+t) over [0, inf)."""
    return -math.e * ei_negative(-1.0)


def l2_via_gamma_ratio(n_max: int = 60) -> float:
    """L2 = 1 - sum_{n>=0} Gamma'(n+1)/Gamma(n+1)^2."""
    return 1.0 - math.fsum(gamma_ratio(n) for n in range(n_max + 1))


def l2_via_alternating_series() -> float:
    """L2 = 1 + e*euler_gamma - e * sum (-1)^{n-1}/(n! n)."""
    return 1.0 + math.e * EULER_GAMMA - math.e * _alternating_inverse_factorial_sum()


def gompertz_via_series() -> float:
    return math.e * (_alternating_inverse_factorial_sum() - EULER_GAMMA)


def constants_table() -> list[tuple[NamedConstant, list[tuple[str, float]]]]:
    """Every exposed constant with its alternative computation routes."""
    l2 = constant_L2()
    g = constant_gompertz()
    return [
        (
            NamedConstant("euler_gamma", EULER_GAMMA, "lim (H_n - ln n)", "stored to 50 digits"),
            [("stored", EULER_GAMMA)],
        ),
        (
            NamedConstant("e", math.e, "exp(1)", "math.e"),
            [("math.e", math.e), ("sum 1/n!", math.fsum(1.0 / math.factorial(n) for n in range(25)))],
        ),
        (
            NamedConstant("L2", l2, "1 + e Ei(-1)", "sum_n (-1)^n p.v. Gamma at 1-n"),
            [
                ("1 + e Ei(-1)", l2),
                ("1 - sum gamma_ratio(n)", l2_via_gamma_ratio()),
                ("1 + e gamma - e sum (-1)^(n-1)/(n! n)", l2_via_alternating_series()),
            ],
        ),
        (
            NamedConstant("gompertz", g, "-e Ei(-1)", "integral e^-t/(t+1) on [0, inf)"),
            [
                ("-e Ei(-1)", g),
                ("1 - L2", 1.0 - l2),
                ("e (sum (-1)^(n-1)/(n! n) - gamma)", gompertz_via_series()),
            ],
        ),
    ]
