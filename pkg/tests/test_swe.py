import math

import numpy as np
import pytest

from conftest import random_coeffs
from edgewave import swe
from edgewave.specfun import radial_pq
from edgewave.swe import ModeCoefficients, SphericalPoint


def fd_curl(coeffs, x, h=1e-4):
    J = np.zeros((3, 3), dtype=complex)
    for j in range(3):
        d = np.zeros(3)
        d[j] = h
        J[:, j] = (swe.eval_field(coeffs, x + d) - swe.eval_field(coeffs, x - d)) / (2 * h)
    return np.array([J[2, 1] - J[1, 2], J[0, 2] - J[2, 0], J[1, 0] - J[0, 1]])


class TestFrame:
    def test_pole(self):
        rhat, that, phat = swe.unit_frame(0.0, 0.0)
        assert np.allclose(rhat, [0, 0, 1])
        assert np.allclose(that, [1, 0, 0])
        assert np.allclose(phat, [0, 1, 0])

    def test_equator(self):
        rhat, that, phat = swe.unit_frame(math.pi / 2, 0.0)
        assert np.allclose(rhat, [1, 0, 0])
        assert np.allclose(that, [0, 0, -1])
        assert np.allclose(phat, [0, 1, 0])

    def test_gram_identity(self, rng):
        for _ in range(10):
            V = np.stack(swe.unit_frame(rng.uniform(0, math.pi),
                                        rng.uniform(0, 2 * math.pi)))
            assert np.max(np.abs(V @ V.T - np.eye(3))) < 1e-14


class TestSphHarmonic:
    def test_norm_constant_even_in_order(self):
        for l in range(1, 7):
            for m in range(0, l + 1):
                assert swe.norm_constant(l, m) == swe.norm_constant(l, -m) > 0

    def test_pole_value(self):
        assert swe.sph_harmonic(1, 0, 0.0, 1.23) == pytest.approx(
            math.sqrt(3 / (4 * math.pi)))
        assert swe.sph_harmonic(2, 1, 0.0, 0.4) == 0.0

    def test_negative_order_phase(self):
        val = swe.sph_harmonic(1, -1, math.pi / 2, math.pi / 2)
        assert val == pytest.approx(-1j * math.sqrt(3 / (8 * math.pi)))

    def test_index_error(self):
        with pytest.raises(ValueError):
            swe.sph_harmonic(1, 2, 0.3, 0.1)


class TestVectorModes:
    def test_m_mode_has_no_radial_part(self, rng):
        for _ in range(5):
            pt = SphericalPoint(rng.uniform(0.1, 1), rng.uniform(0.1, 3),
                                rng.uniform(0, 6))
            M, _ = swe.vector_modes(2, 1, pt, 1.3)
            rhat = swe.unit_frame(pt.theta, pt.phi)[0]
            assert abs(np.dot(rhat, M)) < 1e-15

    def test_n_mode_hand_assembly(self):
        # N at l=1, m=0 against direct assembly from p, q and the harmonic
        k, pt = 1.0, SphericalPoint(1.0, math.pi / 2, 0.0)
        _, N = swe.vector_modes(1, 0, pt, k)
        rad = radial_pq(1, k * pt.r)
        rhat, that, _ = swe.unit_frame(pt.theta, pt.phi)
        y = swe.sph_harmonic(1, 0, pt.theta, pt.phi)
        yt = swe.sph_harmonic_dtheta(1, 0, pt.theta, pt.phi)
        L = math.sqrt(2.0)
        expect = -(1 / L) * (2 * rad.p * y * rhat + rad.q * yt * that)
        assert np.max(np.abs(N - expect)) < 1e-12

    def test_curl_pair_identities(self, rng):
        k = 1.3
        for l in range(1, 5):
            m = int(rng.integers(-l, l + 1))
            x = rng.uniform(0.2, 0.5, 3)
            pt = SphericalPoint.from_cartesian(x)
            M, N = swe.vector_modes(l, m, pt, k)
            curl_m = fd_curl(ModeCoefficients(l, k, a={(l, m): 1.0}), x)
            curl_n = fd_curl(ModeCoefficients(l, k, b={(l, m): 1.0}), x)
            assert np.linalg.norm(curl_m + 1j * k * N) / np.linalg.norm(N) < 1e-5
            assert np.linalg.norm(curl_n - 1j * k * M) / np.linalg.norm(M) < 1e-5

    def test_singular_origin(self):
        with pytest.raises(ValueError):
            swe.vector_modes(1, 0, SphericalPoint(0.0, 0.1, 0.1), 1.0)


class TestEvalField:
    def test_zero_coefficients(self):
        c = ModeCoefficients(3, 1.0)
        assert np.all(swe.eval_field(c, np.array([0.1, 0.2, 0.3])) == 0)

    def test_single_mode_matches_vector_modes(self, rng):
        k = 1.0
        c = ModeCoefficients(1, k, b={(1, 0): 1.0})
        for _ in range(5):
            x = rng.uniform(0.05, 0.5, 3)
            pt = SphericalPoint.from_cartesian(x)
            _, N = swe.vector_modes(1, 0, pt, k)
            assert np.max(np.abs(swe.eval_field(c, x) - N)) < 1e-12

    def test_low_order_scaling(self):
        # only l = 3 modes: max |E| over a small sphere scales like rho^2
        c = ModeCoefficients(3, 1.0, a={(3, 1): 1.0}, b={(3, -2): 0.5})
        theta = np.linspace(0.1, math.pi - 0.1, 40)
        phi = np.linspace(0, 2 * math.pi, 40)
        maxima = []
        for rho in (1e-2, 1e-3, 1e-4):
            E = swe.eval_field(c, (rho, theta[:, None], phi[None, :]))
            maxima.append(np.max(np.linalg.norm(E, axis=-1)))
        slopes = np.diff(np.log(maxima)) / np.diff(np.log([1e-2, 1e-3, 1e-4]))
        assert np.allclose(slopes, 2.0, atol=0.05)

    def test_origin_limit(self):
        c = ModeCoefficients(2, 1.0, b={(1, 0): 1.0}, a={(2, 1): 1.0})
        at0 = swe.eval_field(c, np.zeros(3))
        near0 = swe.eval_field(c, np.array([0.0, 0.0, 1e-9]))
        assert np.max(np.abs(at0 - near0)) < 1e-8
        assert np.all(np.isfinite(at0))

    def test_linearity(self, rng):
        c1, c2 = random_coeffs(rng), random_coeffs(rng)
        x = np.array([0.2, -0.1, 0.15])
        lhs = swe.eval_field(c1 + c2, x)
        rhs = swe.eval_field(c1, x) + swe.eval_field(c2, x)
        assert np.linalg.norm(lhs - rhs) / np.linalg.norm(rhs) < 1e-13


class TestSerialization:
    def test_round_trip(self, rng):
        c = random_coeffs(rng, lmax=4)
        assert ModeCoefficients.from_text(c.to_text()) == c

    def test_file_round_trip(self, rng, tmp_path):
        c = random_coeffs(rng, lmax=2)
        path = tmp_path / "modes.txt"
        c.save(path)
        assert ModeCoefficients.load(path) == c

    def test_header_format(self):
        c = ModeCoefficients(1, 2.0, a={(1, 1): 1 + 2j})
        lines = c.to_text().splitlines()
        assert lines[0] == "k 2.0 lmax 1"
        assert lines[1].split()[:2] == ["1", "-1"]

    def test_immutability(self):
        c = ModeCoefficients(1, 1.0, a={(1, 0): 1.0})
        with pytest.raises(ValueError):
            c._a[1, 0] = 5.0
