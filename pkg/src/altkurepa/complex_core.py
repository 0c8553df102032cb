"""Complex helpers shared by every representation.

Points in the complex plane are plain Python ``complex`` values; the only
thing this module adds is validation (finite components) and the few
periodic functions that need exact argument reduction: ``(-1)**z`` on the
branch ``exp(i*pi*z)`` and ``1/sin(pi*z)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, PoleProximity

DEFAULT_POLE_GUARD = 1e-3


@dataclass(frozen=True)
class EvalConfig:
    """Tolerances and work limits used by the evaluators.

    ``tol_abs`` doubles as the relative truncation threshold for the gamma
    series (a term is negligible once it drops below ``tol_abs*(1+|S|)``).
    """

    tol_rel: float = 1e-12
    tol_abs: float = 1e-14
    max_terms: int = 1000
    quad_max_panels: int = 2000
    pole_guard_radius: float = DEFAULT_POLE_GUARD

    def __post_init__(self):
        if not (self.tol_rel > 0 and self.tol_abs > 0):
            raise DomainError("tolerances must be positive")
        if self.max_terms < 8:
            raise DomainError("max_terms must be at least 8")
        if self.quad_max_panels < 1:
            raise DomainError("quad_max_panels must be positive")
        if not 0 < self.pole_guard_radius < 0.5:
            raise DomainError("pole_guard_radius must lie in (0, 0.5)")


DEFAULT_CONFIG = EvalConfig()


def as_point(z) -> complex:
    """Coerce ``z`` to ``complex``, rejecting NaN and infinities."""
    try:
        w = complex(z)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"not a complex number: {z!r}") from exc
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise DomainError(f"non-finite point: {w!r}")
    return w


def nearest_integer_distance(z) -> tuple[int, float]:
    """Return ``(m, |z - m|)`` with ``m = round(Re z)``."""
    z = as_point(z)
    m = int(round(z.real))
    return m, abs(z - m)


def _sincos_pi_real(f: float) -> tuple[float, float]:
    # f is already reduced to [-0.5, 0.5]; quarter and half points are exact
    if f == 0.0:
        return 0.0, 1.0
    if abs(f) == 0.5:
        return math.copysign(1.0, f), 0.0
    if abs(f) == 0.25:
        return math.copysign(math.sqrt(0.5), f), math.sqrt(0.5)
    x = math.pi * f
    return math.sin(x), math.cos(x)


def _reduce(x: float) -> tuple[int, float]:
    m = round(x)
    return int(m), x - m


def pow_neg_one(z) -> complex:
    """``(-1)**z`` on the library-wide branch ``exp(i*pi*z)``."""
    z = as_point(z)
    m, f = _reduce(z.real)
    s, c = _sincos_pi_real(f)
    scale = math.exp(-math.pi * z.imag)
    if m % 2:
        scale = -scale
    return complex(scale * c, scale * s)


def sin_pi(z) -> complex:
    """``sin(pi*z)`` with the real part reduced to [-1/2, 1/2] first."""
    z = as_point(z)
    m, f = _reduce(z.real)
    s, c = _sincos_pi_real(f)
    y = math.pi * z.imag
    if abs(y) > 700.0:
        raise OverflowError("sin(pi*z) overflows for |Im z| > ~222")
    val = complex(s * math.cosh(y), c * math.sinh(y))
    return -val if m % 2 else val


def inv_sin_pi(z, pole_guard_radius: float = DEFAULT_POLE_GUARD) -> complex:
    """``1/sin(pi*z)``, refusing points within the guard radius of an integer."""
    z = as_point(z)
    m, d = nearest_integer_distance(z)
    if d < pole_guard_radius:
        raise PoleProximity(
            f"1/sin(pi z) has a pole at {m}; |z - {m}| = {d:.3g}",
            location=m,
            distance=d,
        )
    if abs(z.imag) > 200.0:
        # |1/sin| < 2 exp(-pi |Im z|) underflows long before this
        return 0j
    return 1.0 / sin_pi(z)


def check_pole_guard(z: complex, radius: float, is_pole, what: str) -> None:
    """Raise PoleProximity when ``z`` is near an integer ``m`` with ``is_pole(m)``."""
    m, d = nearest_integer_distance(z)
    if d < radius and is_pole(m):
        raise PoleProximity(
            f"{what} has a pole at z = {m}; |z - {m}| = {d:.3g} < {radius:g}",
            location=m,
            distance=d,
        )


def is_integer_point(z: complex) -> bool:
    return z.imag == 0.0 and z.real == math.floor(z.real)
