"""Real special functions used by the spherical wave machinery.

Associated Legendre functions are evaluated in the convention WITHOUT the
Condon-Shortley phase, i.e. P_l^m(x) = (1-x^2)^{m/2} d^m P_l/dx^m for m >= 0,
extended to negative order by

    P_l^{-m}(x) = (-1)^m (l-m)!/(l+m)! P_l^m(x).

This is the convention in which the theta-derivative recursion

    dP_l^m(cos t)/dt = [(l+m)(l-m+1) P_l^{m-1} - P_l^{m+1}] / 2

holds with the stated signs (checked: P_1^1 = sin t gives cos t on both
sides).  All functions accept scalars or numpy arrays in the argument.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import warnings

from scipy.integrate import IntegrationWarning, quad
from scipy.special import spherical_jn


class QuadratureError(RuntimeError):
    """Raised when an adaptive quadrature cannot reach the requested accuracy."""


def factorial(n):
    """n! as a float; exact integer arithmetic below 21, log-gamma above."""
    if n < 0:
        raise ValueError(f"factorial of negative {n}")
    if n <= 20:
        return float(math.factorial(n))
    return math.exp(math.lgamma(n + 1.0))


def double_factorial(n):
    """n!! for n >= -1 (with (-1)!! = 1)."""
    if n < -1:
        raise ValueError(f"double factorial of {n}")
    out = 1.0
    while n > 1:
        out *= n
        n -= 2
    return out


def assoc_legendre(l, m, x):
    """Associated Legendre function P_l^m(x) without Condon-Shortley phase.

    Negative orders are mapped through the (-1)^m (l-m)!/(l+m)! relation.
    Out-of-range orders |m| > l return 0 only when raised from the recursion
    helpers; direct calls require |m| <= l.
    """
    if abs(m) > l:
        raise ValueError(f"order |m|={abs(m)} exceeds degree l={l}")
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1 + 1e-14):
        raise ValueError("argument outside [-1, 1]")
    x = np.clip(x, -1.0, 1.0)
    if m < 0:
        m = -m
        scale = (-1.0) ** m * factorial(l - m) / factorial(l + m)
    else:
        scale = 1.0
    # diagonal start P_m^m = (2m-1)!! (1-x^2)^{m/2}, then upward in degree
    pmm = double_factorial(2 * m - 1) * (1.0 - x * x) ** (m / 2.0)
    if l == m:
        return scale * pmm
    pm1 = x * (2 * m + 1) * pmm
    if l == m + 1:
        return scale * pm1
    for deg in range(m + 2, l + 1):
        pmm, pm1 = pm1, ((2 * deg - 1) * x * pm1 - (deg + m - 1) * pmm) / (deg - m)
    return scale * pm1


def _plm_or_zero(l, m, x):
    if l < 0 or abs(m) > l:
        return np.zeros_like(np.asarray(x, dtype=float))
    return assoc_legendre(l, m, x)


def legendre_dtheta(l, m, theta):
    """d P_l^m(cos theta) / d theta via the order-shifting recursion.

    Valid for 0 <= m <= l; the m = 0 case routes P_l^{-1} through the
    negative-order relation, which collapses the bracket to -P_l^1.
    """
    if not 0 <= m <= l:
        raise ValueError(f"need 0 <= m <= l, got l={l}, m={m}")
    x = np.cos(np.asarray(theta, dtype=float))
    lo = _plm_or_zero(l, m - 1, x) if m >= 1 else assoc_legendre(l, -1, x)
    hi = _plm_or_zero(l, m + 1, x)
    return 0.5 * ((l + m) * (l - m + 1) * lo - hi)


def legendre_over_sin(l, m, theta):
    """(m / sin theta) * P_l^m(cos theta), evaluated stably down to theta = 0.

    Uses the degree-lowering recursion

        (m/sin t) P_l^m(cos t) = [P_{l-1}^{m+1} + (l+m-1)(l+m) P_{l-1}^{m-1}] / 2

    whose right side is polynomial in cos t, hence finite at t = 0.  The sign
    in front of the bracket is fixed so the value equals the direct quotient
    in the phase-free convention (at l=2, m=1 the t->0 limit is +3).
    """
    if m < 1 or m > l:
        raise ValueError(f"need 1 <= m <= l, got l={l}, m={m}")
    x = np.cos(np.asarray(theta, dtype=float))
    return 0.5 * (_plm_or_zero(l - 1, m + 1, x)
                  + (l + m - 1) * (l + m) * _plm_or_zero(l - 1, m - 1, x))


_SERIES_CUTOFF = 1e-3


def _jl_series(l, t):
    # truncated power series around 0; 4 terms reach ~1e-14 absolute below 1e-3
    t = np.asarray(t, dtype=float)
    lead = t ** l / double_factorial(2 * l + 1)
    t2 = t * t
    c1 = t2 / (2.0 * (2 * l + 3))
    c2 = t2 * t2 / (8.0 * (2 * l + 3) * (2 * l + 5))
    c3 = t2 * t2 * t2 / (48.0 * (2 * l + 3) * (2 * l + 5) * (2 * l + 7))
    return lead * (1.0 - c1 + c2 - c3)


def sph_bessel(l, t):
    """Spherical Bessel function j_l(t), stable near t = 0."""
    if l < 0:
        raise ValueError("degree must be >= 0")
    t = np.asarray(t, dtype=float)
    small = np.abs(t) < _SERIES_CUTOFF
    if np.all(small):
        return _jl_series(l, t)
    out = spherical_jn(l, np.where(small, 1.0, t))
    if np.any(small):
        out = np.where(small, _jl_series(l, t), out)
    return out


def sph_bessel_deriv(l, t):
    """j_l'(t) via (l j_{l-1} - (l+1) j_{l+1}) / (2l+1); j_0' = -j_1."""
    if l == 0:
        return -sph_bessel(1, t)
    return (l * sph_bessel(l - 1, t) - (l + 1) * sph_bessel(l + 1, t)) / (2 * l + 1)


@dataclass(frozen=True)
class RadialFunctions:
    """Radial factors of the wave expansion at argument t = k*r."""

    l: int
    t: float
    j: float
    jprime: float
    p: float
    q: float


def radial_pq(l, t):
    """p_l(t) = (j_{l-1}+j_{l+1})/(2l+1), q_l(t) = ((l+1) j_{l-1} - l j_{l+1})/(2l+1).

    At t = 0 the limits are exact: p_1 = 1/3, q_1 = 2/3 and zero for l >= 2.
    Array arguments return arrays in the p/q/j fields.
    """
    if l < 1:
        raise ValueError("degree must be >= 1")
    jm = sph_bessel(l - 1, t)
    jp = sph_bessel(l + 1, t)
    p = (jm + jp) / (2 * l + 1)
    q = ((l + 1) * jm - l * jp) / (2 * l + 1)
    return RadialFunctions(l=l, t=t, j=sph_bessel(l, t), jprime=sph_bessel_deriv(l, t),
                           p=p, q=q)


def pq_leading_coeff(l, k=1.0):
    """Coefficients of r^{l-1} in p_l(kr) and q_l(kr)."""
    base = k ** (l - 1) / ((2 * l + 1) * double_factorial(2 * l - 1))
    return base, (l + 1) * base


def orthogonality_closed_form(n, m):
    """Closed form (n+m)!/(m (n-m)!) of the diagonal weighted inner product."""
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    return factorial(n + m) / (m * factorial(n - m))


def orthogonality_integral(n, m, l, rtol=1e-9):
    """Integral of P_n^m(cos t) P_n^l(cos t) / sin t over t in (0, pi).

    Vanishes for l != m and equals (n+m)!/(m (n-m)!) on the diagonal.  The
    integration runs over (0, pi), the range on which that closed form is the
    classical identity.
    """
    if not (1 <= m <= n and 1 <= l <= n):
        raise ValueError("need 1 <= m, l <= n")

    def integrand(t):
        return (assoc_legendre(n, m, math.cos(t)) * assoc_legendre(n, l, math.cos(t))
                / math.sin(t))

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        val, err = quad(integrand, 0.0, math.pi, epsabs=1e-10, epsrel=rtol,
                        limit=200)
    scale = max(abs(val), orthogonality_closed_form(n, max(m, l)))
    if err > 1e-6 * scale:
        raise QuadratureError(
            f"orthogonality integral (n={n}, m={m}, l={l}) error estimate {err:.2e}")
    return val
