"""Complex vector spherical wavefunctions and the radial wave expansion.

A field is represented by its mode coefficients a_l^m, b_l^m, 1 <= l <= L_max,
m in {0, +-1, ..., +-l}, and evaluated as

    E(x) = sum_{l,m} a_l^m M_l^m(x) + b_l^m N_l^m(x),

where M_l^m = j_l(kr) X_l^m and

    N_l^m = i (j_l(kr)/(kr) + j_l'(kr)) Z_l^m - sqrt(l(l+1))/(kr) j_l(kr) Y_l^m rhat.

Evaluation goes through the equivalent componentwise expansion in the
spherical frame with the radial factors p_l, q_l, which is finite at r = 0
and theta = 0 (the m/sin(theta) factors are routed through the stable
degree-lowering recursion).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .specfun import (assoc_legendre, factorial, legendre_dtheta,
                      legendre_over_sin, radial_pq, sph_bessel,
                      sph_bessel_deriv)


@dataclass(frozen=True)
class SphericalPoint:
    r: float
    theta: float
    phi: float

    def to_cartesian(self):
        st, ct = math.sin(self.theta), math.cos(self.theta)
        return np.array([self.r * st * math.cos(self.phi),
                         self.r * st * math.sin(self.phi),
                         self.r * ct])

    @classmethod
    def from_cartesian(cls, x):
        x = np.asarray(x, dtype=float)
        r = float(np.linalg.norm(x))
        if r == 0.0:
            return cls(0.0, 0.0, 0.0)
        theta = math.acos(max(-1.0, min(1.0, x[2] / r)))
        phi = math.atan2(x[1], x[0]) % (2 * math.pi)
        return cls(r, theta, phi)


def unit_frame(theta, phi):
    """Orthonormal spherical frame (rhat, thetahat, phihat), right handed."""
    theta, phi = np.broadcast_arrays(np.asarray(theta, dtype=float),
                                     np.asarray(phi, dtype=float))
    st, ct = np.sin(theta), np.cos(theta)
    sp, cp = np.sin(phi), np.cos(phi)
    rhat = np.stack([st * cp, st * sp, ct], axis=-1)
    thetahat = np.stack([ct * cp, ct * sp, -st], axis=-1)
    phihat = np.stack([-sp, cp, np.zeros_like(sp)], axis=-1)
    return rhat, thetahat, phihat


def norm_constant(l, m):
    """c_l^m = sqrt((2l+1)/(4 pi) (l-|m|)!/(l+|m|)!); even in m."""
    m = abs(m)
    if m > l:
        raise ValueError("|m| > l")
    return math.sqrt((2 * l + 1) / (4 * math.pi) * factorial(l - m) / factorial(l + m))


def sph_harmonic(l, m, theta, phi):
    """Y_l^m = c_l^m P_l^{|m|}(cos theta) e^{i m phi}."""
    if abs(m) > l:
        raise ValueError("|m| > l")
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    return (norm_constant(l, m) * assoc_legendre(l, abs(m), np.cos(theta))
            * np.exp(1j * m * phi))


def sph_harmonic_dtheta(l, m, theta, phi):
    """d Y_l^m / d theta."""
    return (norm_constant(l, m) * legendre_dtheta(l, abs(m), theta)
            * np.exp(1j * m * np.asarray(phi, dtype=float)))


def sph_harmonic_over_sin(l, m, theta, phi):
    """(m / sin theta) Y_l^m, finite at theta -> 0."""
    if m == 0:
        return np.zeros(np.broadcast(np.asarray(theta), np.asarray(phi)).shape,
                        dtype=complex)
    sign = 1.0 if m > 0 else -1.0
    return (sign * norm_constant(l, m) * legendre_over_sin(l, abs(m), theta)
            * np.exp(1j * m * np.asarray(phi, dtype=float)))


def vector_modes(l, m, point, k):
    """The mode pair (M_l^m, N_l^m) at one interior point, Cartesian frame."""
    if l < 1 or abs(m) > l:
        raise ValueError("need l >= 1 and |m| <= l")
    if point.r <= 0:
        raise ValueError("vector modes are singular at r = 0; use eval_field")
    rhat, thetahat, phihat = unit_frame(point.theta, point.phi)
    L = math.sqrt(l * (l + 1))
    kr = k * point.r
    y = sph_harmonic(l, m, point.theta, point.phi)
    yt = sph_harmonic_dtheta(l, m, point.theta, point.phi)
    ys = sph_harmonic_over_sin(l, m, point.theta, point.phi)
    x_lm = (1j / L) * (1j * ys * thetahat - yt * phihat)
    z_lm = (1j / L) * (yt * thetahat + 1j * ys * phihat)
    j = sph_bessel(l, kr)
    jp = sph_bessel_deriv(l, kr)
    mode_m = j * x_lm
    mode_n = 1j * (j / kr + jp) * z_lm - (L / kr) * j * y * rhat
    return mode_m, mode_n


class ModeCoefficients:
    """Dense coefficient table a_l^m, b_l^m for 1 <= l <= L_max, m in [l]_0.

    Instances are immutable after construction; build from a dict mapping
    (l, m) -> complex for each family, or mutate a zeros() table through
    with_mode() which returns a copy.
    """

    def __init__(self, lmax, k, a=None, b=None, rho0=1.0):
        if lmax < 1:
            raise ValueError("L_max must be >= 1")
        if k <= 0:
            raise ValueError("wavenumber must be positive")
        self.lmax = int(lmax)
        self.k = float(k)
        self.rho0 = float(rho0)
        shape = (self.lmax + 1, 2 * self.lmax + 1)
        self._a = np.zeros(shape, dtype=complex)
        self._b = np.zeros(shape, dtype=complex)
        for table, src in ((self._a, a), (self._b, b)):
            if src:
                for (l, m), val in src.items():
                    if not (1 <= l <= self.lmax and abs(m) <= l):
                        raise ValueError(f"mode (l={l}, m={m}) out of range")
                    table[l, m] = val
        self._a.flags.writeable = False
        self._b.flags.writeable = False

    @classmethod
    def zeros(cls, lmax, k, rho0=1.0):
        return cls(lmax, k, rho0=rho0)

    def a(self, l, m):
        return self._a[l, m]

    def b(self, l, m):
        return self._b[l, m]

    def with_mode(self, family, l, m, value):
        """Copy with one coefficient replaced."""
        new = ModeCoefficients.__new__(ModeCoefficients)
        new.lmax, new.k, new.rho0 = self.lmax, self.k, self.rho0
        new._a = self._a.copy()
        new._b = self._b.copy()
        {"a": new._a, "b": new._b}[family][l, m] = value
        new._a.flags.writeable = False
        new._b.flags.writeable = False
        return new

    def modes(self):
        """Iterate (l, m, a_lm, b_lm) over nonzero entries."""
        for l in range(1, self.lmax + 1):
            for m in range(-l, l + 1):
                av, bv = self._a[l, m], self._b[l, m]
                if av != 0 or bv != 0:
                    yield l, m, av, bv

    def __add__(self, other):
        if self.lmax != other.lmax or self.k != other.k:
            raise ValueError("mismatched tables")
        new = ModeCoefficients.__new__(ModeCoefficients)
        new.lmax, new.k, new.rho0 = self.lmax, self.k, self.rho0
        new._a = self._a + other._a
        new._b = self._b + other._b
        new._a.flags.writeable = False
        new._b.flags.writeable = False
        return new

    # -- serialization: header "k <value> lmax <value>", then one line per
    #    mode "l m re(a) im(a) re(b) im(b)"; exact round-trip via repr floats.
    def to_text(self):
        lines = [f"k {float(self.k)!r} lmax {self.lmax}"]
        for l in range(1, self.lmax + 1):
            for m in range(-l, l + 1):
                av, bv = self._a[l, m], self._b[l, m]
                lines.append(f"{l} {m} {float(av.real)!r} {float(av.imag)!r} {float(bv.real)!r} {float(bv.imag)!r}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        head = lines[0].split()
        if head[0] != "k" or head[2] != "lmax":
            raise ValueError("bad header")
        k, lmax = float(head[1]), int(head[3])
        a, b = {}, {}
        for ln in lines[1:]:
            f = ln.split()
            l, m = int(f[0]), int(f[1])
            a[(l, m)] = complex(float(f[2]), float(f[3]))
            b[(l, m)] = complex(float(f[4]), float(f[5]))
        return cls(lmax, k, a=a, b=b)

    def save(self, path):
        with open(path, "w") as fh:
            fh.write(self.to_text())

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_text(fh.read())

    def __eq__(self, other):
        return (isinstance(other, ModeCoefficients) and self.lmax == other.lmax
                and self.k == other.k and np.array_equal(self._a, other._a)
                and np.array_equal(self._b, other._b))


def _spherical_components(coeffs, r, theta, phi):
    """(E_r, E_theta, E_phi) of the expansion at broadcastable arrays."""
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    shape = np.broadcast(r, theta, phi).shape
    er = np.zeros(shape, dtype=complex)
    et = np.zeros(shape, dtype=complex)
    ep = np.zeros(shape, dtype=complex)
    k = coeffs.k
    for l, m, av, bv in coeffs.modes():
        L = math.sqrt(l * (l + 1))
        rad = radial_pq(l, k * r)
        y = sph_harmonic(l, m, theta, phi)
        yt = sph_harmonic_dtheta(l, m, theta, phi)
        ys = sph_harmonic_over_sin(l, m, theta, phi)
        er += -(1.0 / L) * bv * l * (l + 1) * rad.p * y
        et += -(1.0 / L) * (av * rad.j * ys + bv * rad.q * yt)
        ep += -(1j / L) * (av * rad.j * yt + bv * rad.q * ys)
    return er, et, ep


def eval_field(coeffs, point):
    """Field vector E at a point (SphericalPoint or Cartesian array-like).

    Works for arrays too: pass a tuple (r, theta, phi) of broadcastable
    arrays and get an (..., 3) complex array back.  r = 0 is handled by the
    exact series limits (only l = 1 contributes there).
    """
    if isinstance(point, SphericalPoint):
        r, theta, phi = point.r, point.theta, point.phi
    elif isinstance(point, tuple) and len(point) == 3:
        r, theta, phi = point
    else:
        sp = SphericalPoint.from_cartesian(point)
        r, theta, phi = sp.r, sp.theta, sp.phi
    er, et, ep = _spherical_components(coeffs, r, theta, phi)
    rhat, thetahat, phihat = unit_frame(theta, phi)
    out = (er[..., None] * rhat + et[..., None] * thetahat + ep[..., None] * phihat)
    return out
