import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgewave import specfun as sf


class TestAssocLegendre:
    def test_values_at_one(self):
        assert sf.assoc_legendre(3, 0, 1.0) == 1.0
        assert sf.assoc_legendre(2, 1, 1.0) == 0.0

    def test_closed_form_degree_two(self):
        # P_2^1(x) = 3 x sqrt(1 - x^2)
        x = 0.5
        assert sf.assoc_legendre(2, 1, x) == pytest.approx(
            3 * x * math.sin(math.pi / 3), abs=1e-12)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            sf.assoc_legendre(2, 3, 0.5)
        with pytest.raises(ValueError):
            sf.assoc_legendre(2, 1, 1.5)

    def test_negative_order_relation(self):
        for n in range(1, 11):
            for m in range(1, n + 1):
                for x in (-0.8, 0.0, 0.3, 0.99):
                    lhs = sf.assoc_legendre(n, -m, x)
                    rhs = ((-1) ** m * sf.factorial(n - m) / sf.factorial(n + m)
                           * sf.assoc_legendre(n, m, x))
                    assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-300)

    @given(st.integers(1, 8), st.floats(-0.999, 0.999))
    @settings(max_examples=60, deadline=None)
    def test_matches_recurrence_free_formulas(self, l, x):
        # m = 0 reduces to the Legendre polynomial
        ref = np.polynomial.legendre.Legendre.basis(l)(x)
        assert sf.assoc_legendre(l, 0, x) == pytest.approx(ref, rel=1e-10, abs=1e-12)

    def test_vectorized(self):
        x = np.linspace(-1, 1, 7)
        vals = sf.assoc_legendre(3, 2, x)
        assert vals.shape == x.shape
        assert vals[0] == sf.assoc_legendre(3, 2, -1.0)


class TestThetaRecursions:
    def test_dtheta_degree_one(self):
        # d(sin t)/dt at pi/2 and d(cos t)/dt at pi/2
        assert sf.legendre_dtheta(1, 1, math.pi / 2) == pytest.approx(0.0, abs=1e-15)
        assert sf.legendre_dtheta(1, 0, math.pi / 2) == pytest.approx(-1.0)

    def test_dtheta_vs_finite_difference(self, rng):
        h = 1e-6
        for _ in range(20):
            theta = rng.uniform(0.05, math.pi - 0.05)
            fd = (sf.assoc_legendre(2, 2, math.cos(theta + h))
                  - sf.assoc_legendre(2, 2, math.cos(theta - h))) / (2 * h)
            assert sf.legendre_dtheta(2, 2, theta) == pytest.approx(fd, abs=1e-8)

    def test_over_sin_simple(self):
        assert sf.legendre_over_sin(1, 1, math.pi / 2) == pytest.approx(1.0)

    def test_over_sin_limit_at_zero(self):
        # lim of P_2^1(cos t)/sin t = lim 3 cos t = 3
        assert sf.legendre_over_sin(2, 1, 0.0) == pytest.approx(3.0)

    def test_over_sin_vs_direct_quotient(self):
        theta = math.pi / 4
        direct = 2 * sf.assoc_legendre(3, 2, math.cos(theta)) / math.sin(theta)
        assert sf.legendre_over_sin(3, 2, theta) == pytest.approx(direct, abs=1e-10)

    def test_index_errors(self):
        with pytest.raises(ValueError):
            sf.legendre_over_sin(2, 0, 0.3)
        with pytest.raises(ValueError):
            sf.legendre_dtheta(2, 3, 0.3)


class TestSphericalBessel:
    def test_small_argument(self):
        assert sf.sph_bessel(0, 1e-12) == pytest.approx(1.0)
        assert sf.sph_bessel(2, 0.0) == 0.0

    def test_closed_form_degree_one(self):
        t = 0.5
        assert sf.sph_bessel(1, t) == pytest.approx(
            math.sin(t) / t ** 2 - math.cos(t) / t, rel=1e-12)

    @pytest.mark.parametrize("t", [0.1, 1.0, 5.0])
    @pytest.mark.parametrize("l", range(1, 11))
    def test_ratio_recurrence(self, l, t):
        lhs = sf.sph_bessel(l, t) / t
        rhs = (sf.sph_bessel(l - 1, t) + sf.sph_bessel(l + 1, t)) / (2 * l + 1)
        assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-18)

    def test_derivative_recurrence(self):
        for l in range(1, 13):
            for t in (0.3, 2.0, 9.0):
                ref = (l * sf.sph_bessel(l - 1, t)
                       - (l + 1) * sf.sph_bessel(l + 1, t)) / (2 * l + 1)
                assert sf.sph_bessel_deriv(l, t) == pytest.approx(ref, rel=1e-12)

    def test_series_matches_scipy_at_crossover(self):
        from scipy.special import spherical_jn
        for l in range(0, 6):
            for t in (5e-4, 9.99e-4, 1.01e-3, 2e-3):
                assert sf.sph_bessel(l, t) == pytest.approx(
                    spherical_jn(l, t), rel=1e-12, abs=1e-16)


class TestRadialPQ:
    def test_limits_degree_one(self):
        rad = sf.radial_pq(1, 0.0)
        assert rad.p == pytest.approx(1 / 3)
        assert rad.q == pytest.approx(2 / 3)

    def test_leading_coefficients_degree_two(self):
        # p_2(t)/t -> 1/15, q_2(t)/t -> 3/15
        t = 1e-6
        rad = sf.radial_pq(2, t)
        assert rad.p / t == pytest.approx(1 / 15, rel=1e-9)
        assert rad.q / t == pytest.approx(3 / 15, rel=1e-9)
        lead_p, lead_q = sf.pq_leading_coeff(2)
        assert lead_p == pytest.approx(1 / 15)
        assert lead_q == pytest.approx(3 / 15)

    def test_composition_from_bessel(self):
        t = 1.2
        rad = sf.radial_pq(3, t)
        jm, jp = sf.sph_bessel(2, t), sf.sph_bessel(4, t)
        assert rad.p == pytest.approx((jm + jp) / 7, abs=1e-13)
        assert rad.q == pytest.approx((4 * jm - 3 * jp) / 7, abs=1e-13)


class TestOrthogonality:
    def test_off_diagonal_zero(self):
        assert abs(sf.orthogonality_integral(2, 1, 2)) < 1e-8

    def test_diagonal_values(self):
        assert sf.orthogonality_integral(2, 1, 1) == pytest.approx(6.0, abs=1e-6)
        assert sf.orthogonality_integral(4, 2, 2) == pytest.approx(180.0, rel=1e-5)

    def test_closed_form_table(self):
        for n in range(1, 7):
            for m in range(1, n + 1):
                ref = sf.factorial(n + m) / (m * sf.factorial(n - m))
                val = sf.orthogonality_integral(n, m, m)
                assert val == pytest.approx(ref, rel=1e-5)
