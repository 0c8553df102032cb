"""The alternating Kurepa function A(z) and its companion A1(z).

A(n) = n! - (n-1)! + ... +- 1! for integers n >= 1; A extends to a
meromorphic function with simple poles at -2, -3, ... and satisfies
A(z) + A(z-1) = Gamma(z+1). A1(z) = sum_n (-1)^n Gamma(z+1-n) solves the same
equation with simple poles at every integer.

Representations of A:

* ``Integral``   -- integral of e^{-t} (t^{z+1} - (-1)^z t)/(t+1) over (0, inf), Re z > 0
* ``Recurrence`` -- shift into 1/2 < Re z <= 3/2, integrate, then unwind the functional equation
* ``ClosedForm`` -- -L2 (-1)^z + e Gamma(z+2) Gamma(-z-1, 1)
* ``Slavic``     -- -L2 (-1)^z + pi e / sin(pi z) + sum_n (-1)^n Gamma(z+1-n)

and of A1: ``Series`` (the defining sum) and ``ClosedForm``
(-pi e / sin(pi z) + e Gamma(z+2) Gamma(-z-1, 1)). Everywhere (-1)^z means
exp(i pi z).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .complex_core import (
    DEFAULT_CONFIG,
    EvalConfig,
    as_point,
    check_pole_guard,
    inv_sin_pi,
    is_integer_point,
    pow_neg_one,
)
from .errors import DomainError, NoConvergence, PoleProximity
from .gamma_family import gamma
from .quadrature import integrate
from .special_aux import constant_L2, upper_incomplete_gamma_info

_EPS = 2.220446049250313e-16


class Representation(enum.Enum):
    INTEGRAL = "Integral"
    RECURRENCE = "Recurrence"
    SERIES = "Series"
    CLOSED_FORM = "ClosedForm"
    SLAVIC = "Slavic"
    AUTO = "Auto"

    @classmethod
    def parse(cls, name: str) -> "Representation":
        for member in cls:
            if member.value.lower() == name.lower() or member.name.lower() == name.lower():
                return member
        raise DomainError(f"unknown representation {name!r}")


@dataclass(frozen=True)
class EvalOutcome:
    value: complex
    err_est: float
    method: Representation
    work: int

    def __post_init__(self):
        if self.method is Representation.AUTO:
            raise ValueError("an outcome must name a concrete representation")
        if not self.err_est >= 0:
            raise ValueError("err_est must be non-negative")
        if self.work < 1:
            raise ValueError("work must be at least 1")


def _a_pole(m: int) -> bool:
    return m <= -2


def _any_integer(m: int) -> bool:
    return True


def a_integer_oracle(n: int) -> int:
    """Exact A(n) = sum_{i=1}^{n} (-1)^{n-i} i! for 0 <= n <= 500."""
    if not 0 <= n <= 500:
        raise DomainError(f"integer oracle defined for 0 <= n <= 500, got {n}")
    total = 0
    fact = 1
    for i in range(1, n + 1):
        fact *= i
        total = fact - total
    return total


def _exact_a(n: int) -> int:
    # A(-1) = Gamma(1) - A(0) = 1
    if n == -1:
        return 1
    return a_integer_oracle(n)


# -- Integral -------------------------------------------------------------

def _tail_cutoff(x: float, p_abs: float, target: float) -> tuple[float, float]:
    """Smallest power-of-two T with 2 e^{-T} (T^x + |p|) below ``target``.

    For T >= 2(x+1) both integrand pieces are bounded by e^{-t} t^x and
    |p| e^{-t}, whose tails past T are at most 2 e^{-T} T^x and |p| e^{-T}.
    """
    t = max(8.0, 2.0 * (x + 1.0))
    while True:
        bound = 2.0 * math.exp(-t) * (t ** x + p_abs)
        if bound < target or t > 4096.0:
            return t, bound
        t *= 1.25


def a_integral(z, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalOutcome:
    """A(z) by adaptive quadrature of its integral representation (Re z > 0)."""
    z = as_point(z)
    if not z.real > 0:
        raise DomainError(f"integral representation needs Re z > 0, got {z}")
    p = pow_neg_one(z)
    zp1 = z + 1.0

    def integrand(t):
        logt = np.log(t)
        et = np.exp(-t)
        return (np.exp(zp1 * logt - t) - p * t * et) / (t + 1.0)

    big = math.gamma(z.real + 2.0) + abs(p)
    target = max(cfg.tol_abs, cfg.tol_rel * big) / 10.0
    upper, tail = _tail_cutoff(z.real, abs(p), target)
    breaks = [0.0, 0.5, 1.0]
    b = 2.0
    while b < upper:
        breaks.append(b)
        b *= 2.0
    breaks.append(upper)
    res = integrate(integrand, breaks, cfg.tol_abs, cfg.tol_rel, cfg.quad_max_panels)
    err = res.error + tail + 4 * _EPS * abs(res.value)
    return EvalOutcome(res.value, err, Representation.INTEGRAL, res.panels)


# -- closed forms ---------------------------------------------------------

def _incomplete_gamma_term(z: complex, cfg: EvalConfig) -> tuple[complex, float, int]:
    # e Gamma(z+2) Gamma(-z-1, 1), the integral of e^{-t} t^{z+1}/(t+1)
    g = gamma(z + 2.0, cfg.pole_guard_radius)
    ug, ug_err, n = upper_incomplete_gamma_info(-z - 1.0, 1.0, cfg)
    value = math.e * g * ug
    err = math.e * abs(g) * ug_err + 8 * _EPS * abs(value)
    return value, err, n


def a_closed(z, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalOutcome:
    """A(z) = -L2 (-1)^z + e Gamma(z+2) Gamma(-z-1, 1)."""
    z = as_point(z)
    check_pole_guard(z, cfg.pole_guard_radius, _a_pole, "A")
    corr = -constant_L2() * pow_neg_one(z)
    term, err, n = _incomplete_gamma_term(z, cfg)
    value = corr + term
    err += 4 * _EPS * (abs(corr) + abs(value))
    return EvalOutcome(value, err, Representation.CLOSED_FORM, n)


def a1_closed(z, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalOutcome:
    """A1(z) = -pi e / sin(pi z) + e Gamma(z+2) Gamma(-z-1, 1)."""
    z = as_point(z)
    check_pole_guard(z, cfg.pole_guard_radius, _any_integer, "A1")
    corr = -math.pi * math.e * inv_sin_pi(z, cfg.pole_guard_radius)
    term, err, n = _incomplete_gamma_term(z, cfg)
    value = corr + term
    err += 4 * _EPS * (abs(corr) + abs(value))
    return EvalOutcome(value, err, Representation.CLOSED_FORM, n)


# -- gamma series ---------------------------------------------------------

def _gamma_series(z: complex, cfg: EvalConfig) -> tuple[complex, float, int]:
    """sum_{n>=0} (-1)^n Gamma(z+1-n), stopped after two consecutive
    negligible terms once the factorial decay has set in."""
    parts = []
    total = 0j
    mass = 0.0
    quiet = 0
    onset = z.real + 2.0
    for n in range(cfg.max_terms):
        term = gamma(z + 1.0 - n, cfg.pole_guard_radius)
        if n % 2:
            term = -term
        parts.append(term)
        total += term
        mass += abs(term)
        if n > onset and abs(term) < cfg.tol_abs * (1.0 + abs(total)):
            quiet += 1
            if quiet == 2:
                value = complex(
                    math.fsum(t.real for t in parts), math.fsum(t.imag for t in parts)
                )
                return value, 4 * _EPS * mass + abs(term), n + 1
        else:
            quiet = 0
    raise NoConvergence(f"gamma series did not settle within {cfg.max_terms} terms at z={z}")


def a_slavic(z, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalOutcome:
    """A(z) = -L2 (-1)^z + pi e / sin(pi z) + sum_n (-1)^n Gamma(z+1-n), z not an integer."""
    z = as_point(z)
    check_pole_guard(z, cfg.pole_guard_radius, _any_integer, "the Slavic-type formula")
    corr = -constant_L2() * pow_neg_one(z) + math.pi * math.e * inv_sin_pi(z, cfg.pole_guard_radius)
    s, err, n = _gamma_series(z, cfg)
    value = corr + s
    err += 4 * _EPS * (abs(corr) + abs(value))
    return EvalOutcome(value, err, Representation.SLAVIC, n)


def a1_series(z, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalOutcome:
    """A1(z) = sum_{n>=0} (-1)^n Gamma(z+1-n), z not an integer."""
    z = as_point(z)
    check_pole_guard(z, cfg.pole_guard_radius, _any_integer, "A1")
    s, err, n = _gamma_series(z, cfg)
    return EvalOutcome(s, err, Representation.SERIES, n)


# -- recurrence continuation ----------------------------------------------

def a_recurrence(z, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalOutcome:
    """A(z) from the integral at z+k, 1/2 < Re(z+k) <= 3/2, carried back
    to z through A(w) + A(w-1) = Gamma(w+1)."""
    z = as_point(z)
    check_pole_guard(z, cfg.pole_guard_radius, _a_pole, "A")
    k = math.floor(1.5 - z.real)
    w = z + k
    base = a_integral(w, cfg)
    value = base.value
    err = base.err_est
    if k > 0:
        # A(w-1) = Gamma(w+1) - A(w), stepping w down to z
        for j in range(k, 0, -1):
            g = gamma(z + j + 1.0, cfg.pole_guard_radius)
            value = g - value
            err += 2 * _EPS * (abs(g) + abs(value))
    else:
        # A(w+1) = Gamma(w+2) - A(w), stepping w up to z
        for j in range(k, 0):
            g = gamma(z + j + 2.0, cfg.pole_guard_radius)
            value = g - value
            err += 2 * _EPS * (abs(g) + abs(value))
    return EvalOutcome(value, err, Representation.RECURRENCE, base.work + abs(k))


# -- dispatch -------------------------------------------------------------

_A_METHODS = {
    Representation.INTEGRAL: a_integral,
    Representation.RECURRENCE: a_recurrence,
    Representation.CLOSED_FORM: a_closed,
    Representation.SLAVIC: a_slavic,
}

_A1_METHODS = {
    Representation.SERIES: a1_series,
    Representation.CLOSED_FORM: a1_closed,
}


def _as_method(method) -> Representation:
    return method if isinstance(method, Representation) else Representation.parse(method)


def a_eval(z, method=Representation.AUTO, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalOutcome:
    """Evaluate A(z) with a chosen representation, or pick one (``Auto``).

    Auto returns exact values at integers n >= -1, the closed form
    elsewhere, and on Re z <= 0 falls back to the recurrence when the
    closed form's error estimate is above tolerance.
    """
    z = as_point(z)
    method = _as_method(method)
    if method is Representation.SERIES:
        raise DomainError("the plain gamma series represents A1, not A")
    if method is not Representation.AUTO:
        return _A_METHODS[method](z, cfg)

    if is_integer_point(z):
        n = int(z.real)
        if n <= -2:
            raise PoleProximity(f"A has a simple pole at z = {n}", location=n, distance=0.0)
        return EvalOutcome(complex(_exact_a(n)), 0.0, Representation.RECURRENCE, max(n, 0) + 1)

    closed = a_closed(z, cfg)
    tol = cfg.tol_abs + cfg.tol_rel * abs(closed.value)
    if z.real > 0 or closed.err_est <= tol:
        return closed
    try:
        rec = a_recurrence(z, cfg)
    except NoConvergence:
        return closed
    return rec if rec.err_est < closed.err_est else closed


def a1_eval(z, method=Representation.AUTO, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalOutcome:
    """Evaluate A1(z); Auto uses the closed form."""
    z = as_point(z)
    method = _as_method(method)
    if method is Representation.AUTO:
        method = Representation.CLOSED_FORM
    try:
        fn = _A1_METHODS[method]
    except KeyError:
        raise DomainError(f"A1 has no {method.value} representation") from None
    return fn(z, cfg)
