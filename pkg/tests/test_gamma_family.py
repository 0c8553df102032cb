import cmath
import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from altkurepa.errors import GammaOverflow, PoleProximity
from altkurepa.gamma_family import EULER_GAMMA, gamma, gamma_ratio, harmonic, log_gamma

mpmath.mp.dps = 30


def _rel(a, b):
    return abs(a - b) / abs(b)


class TestGamma:
    @pytest.mark.parametrize("n", range(1, 20))
    def test_factorials(self, n):
        assert gamma(n) == math.factorial(n - 1)

    @pytest.mark.parametrize(
        "z",
        [0.5 + 0j, 1.5 + 2j, -2.3 + 0.7j, 10 - 3j, -7.5 + 0.1j, 0.1 + 20j, 30 + 5j, -15.2 - 4j],
    )
    def test_against_mpmath(self, z):
        ref = complex(mpmath.gamma(mpmath.mpc(z)))
        assert _rel(gamma(z), ref) < 1e-12

    @given(
        st.floats(min_value=-20, max_value=20, allow_nan=False),
        st.floats(min_value=-10, max_value=10, allow_nan=False),
    )
    def test_recurrence(self, x, y):
        z = complex(x, y)
        if abs(z - round(x)) < 0.05 or abs(z + 1 - round(x + 1)) < 0.05:
            return
        assert _rel(gamma(z + 1), z * gamma(z)) < 1e-11

    def test_half(self):
        assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-15)
        assert abs(gamma(0.5 + 0j) - math.sqrt(math.pi)) < 1e-14

    def test_pole_guard(self):
        with pytest.raises(PoleProximity):
            gamma(-3 + 1e-5j)
        gamma(3 + 1e-5j)

    def test_overflow(self):
        with pytest.raises(GammaOverflow):
            gamma(200.0)
        with pytest.raises(GammaOverflow):
            gamma(200 + 1j)


class TestLogGamma:
    @pytest.mark.parametrize("z", [2.5 + 3j, -3.5 + 0.2j, 50 + 1j, 0.2 - 40j])
    def test_exp_matches_gamma(self, z):
        ref = complex(mpmath.loggamma(mpmath.mpc(z)))
        lg = log_gamma(z)
        assert -math.pi < lg.imag <= math.pi
        assert abs(cmath.exp(lg) - cmath.exp(ref)) <= 1e-11 * abs(cmath.exp(ref))

    def test_negative_real_gamma(self):
        lg = log_gamma(-0.5)
        assert lg.imag == pytest.approx(math.pi)
        assert math.exp(lg.real) == pytest.approx(2 * math.sqrt(math.pi))


class TestHarmonic:
    def test_values(self):
        assert harmonic(0) == 0
        assert harmonic(1) == 1
        assert harmonic(4) == pytest.approx(25 / 12, rel=1e-16)

    def test_gamma_ratio_oracle(self):
        # Gamma'(n+1)/Gamma(n+1)^2 = psi(n+1)/n!
        for n in (0, 1, 5, 20, 180):
            ref = mpmath.digamma(n + 1) / mpmath.factorial(n)
            assert gamma_ratio(n) == pytest.approx(float(ref), rel=1e-13)

    def test_euler_constant(self):
        assert EULER_GAMMA == float(mpmath.euler)
