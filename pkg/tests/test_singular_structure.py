import math

import mpmath
import pytest

from altkurepa.alt_kurepa import a1_closed, a_closed
from altkurepa.errors import DomainError, NoConvergence
from altkurepa.gamma_family import EULER_GAMMA, gamma
from altkurepa.singular_structure import (
    SingularityInfo,
    pv_a,
    pv_a1,
    pv_contour,
    pv_gamma,
    pv_numeric,
    pv_product_rule,
    residue_a,
    residue_a1,
    residue_numeric,
    singularity_info,
)
from altkurepa.special_aux import constant_L2

mpmath.mp.dps = 30
E = math.e


def a1(z):
    return a1_closed(z).value


def a(z):
    return a_closed(z).value


class TestClosedForms:
    def test_residues_of_a(self):
        assert [residue_a(n) for n in (4, 3, 2)] == [2.5, -2.0, 1.0]
        with pytest.raises(DomainError):
            residue_a(1)

    def test_residues_of_a1(self):
        assert residue_a1(0) == -E
        assert residue_a1(1) == E
        assert residue_a1(-2) == pytest.approx(-E + 1)

    def test_pv_gamma(self):
        assert pv_gamma(0) == pytest.approx(-EULER_GAMMA, rel=1e-15)
        assert pv_gamma(-1) == pytest.approx(-(1 - EULER_GAMMA), rel=1e-15)
        with pytest.raises(DomainError):
            pv_gamma(1)

    def test_pv_gamma_mpmath(self):
        # constant term of the Laurent series at -n is psi(n+1)/n! * (-1)^n
        for n in range(8):
            ref = (-1) ** n * mpmath.digamma(n + 1) / mpmath.factorial(n)
            assert pv_gamma(-n) == pytest.approx(float(ref), rel=1e-13)

    def test_pv_a1_values(self):
        assert pv_a1(0) == pytest.approx(constant_L2())
        assert pv_a1(1) == pytest.approx(1 - constant_L2())

    def test_pv_a_regular_points(self):
        assert pv_a(-1) == 1.0
        assert pv_a(5) == 101.0

    def test_info(self):
        info = singularity_info("Gamma", 0)
        assert info.order == 1 and info.residue == 1.0
        assert singularity_info("Gamma", 4).principal_value == 6.0
        assert singularity_info("A", 3).order == 0
        with pytest.raises(DomainError):
            singularity_info("Zeta", 0)

    def test_info_invariants(self):
        with pytest.raises(ValueError):
            SingularityInfo(0, 0, 1.0, 0.0, "A")
        with pytest.raises(ValueError):
            SingularityInfo(0, 1, 0.0, 0.0, "A")
        with pytest.raises(ValueError):
            SingularityInfo(0, 2, 1.0, 0.0, "A")


class TestNumeric:
    @pytest.mark.parametrize("m", range(-6, 7))
    def test_a1_contours(self, m):
        r, _ = residue_numeric(a1, m)
        p, _ = pv_contour(a1, m)
        assert abs(r - residue_a1(m)) < 1e-6
        assert abs(p - pv_a1(m)) < 1e-6

    @pytest.mark.parametrize("n", range(2, 7))
    def test_a_residues_and_pv(self, n):
        assert abs(residue_numeric(a, -n)[0] - residue_a(n)) < 1e-6
        assert abs(pv_numeric(a, -n)[0] - pv_a(-n)) < 1e-6

    @pytest.mark.parametrize("n", range(0, 6))
    def test_pv_gamma_numeric(self, n):
        value, err = pv_numeric(gamma, -n)
        assert abs(value - pv_gamma(-n)) < 1e-7
        assert err < 1e-6

    def test_contour_detects_nearby_singularity(self):
        with pytest.raises(NoConvergence):
            pv_contour(lambda z: 1 / (z - 0.15), 0)
        with pytest.raises(DomainError):
            residue_numeric(a1, 0, radius=0.7)

    def test_pv_fe_at_poles(self):
        for n in range(2, 7):
            assert abs(pv_a(-n) + pv_a(-n - 1) - pv_gamma(-n + 1)) < 1e-12

    def test_product_rule(self):
        # p.v. of z * Gamma(z) at 0 is Gamma(1) = 1 (regular product)
        value = pv_product_rule(lambda z: z, pv_gamma(0), 1.0, 0)
        assert value == pytest.approx(1.0, abs=1e-9)
        value = pv_product_rule(lambda z: z, pv_gamma(0), 1.0, 0, f1_prime=1.0)
        assert value == 1.0
