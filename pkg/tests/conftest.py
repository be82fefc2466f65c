import numpy as np
import pytest

from edgewave import EdgeCornerConfig, ImpedanceSpec, ModeCoefficients, parse_angle


def make_config(alpha, case="imp-imp", eta1=1.0, eta2=1.0, k=1.0):
    a = parse_angle(alpha) if isinstance(alpha, str) else alpha
    specs = {
        "imp-imp": (ImpedanceSpec.series(eta1), ImpedanceSpec.series(eta2)),
        "pec-pmc": (ImpedanceSpec.infinite(), ImpedanceSpec.zero()),
        "imp-pec": (ImpedanceSpec.infinite(), ImpedanceSpec.series(eta2)),
        "imp-pmc": (ImpedanceSpec.zero(), ImpedanceSpec.series(eta2)),
    }
    bc1, bc2 = specs[case]
    return EdgeCornerConfig(a, bc1, bc2, k)


def random_coeffs(rng, lmax=3, k=1.3):
    a = {(l, m): complex(*rng.standard_normal(2))
         for l in range(1, lmax + 1) for m in range(-l, l + 1)}
    b = {(l, m): complex(*rng.standard_normal(2))
         for l in range(1, lmax + 1) for m in range(-l, l + 1)}
    return ModeCoefficients(lmax, k, a=a, b=b)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
