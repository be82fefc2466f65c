"""Edge-corner geometry and boundary trace operators.

The corner is placed canonically: the edge runs along the x3 axis, face 1
lies in the half-plane phi = 0 and face 2 in phi = phi0 = alpha*pi, with the
wedge interior 0 < phi < phi0.  Exterior unit normals:

    nu_1 = (0, -1, 0),      nu_2 = (-sin phi0, cos phi0, 0).

All operators in this module are geometric: trace_tangential_E returns the
actual cross product nu ^ E of the evaluated field, impedance_residual the
actual boundary combination nu ^ (curl E) + eta (nu ^ E) ^ nu.  Everything
is reported in the Cartesian frame.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
import numpy as np

from .angles import Angle
from .swe import (eval_field, sph_harmonic, sph_harmonic_dtheta,
                  sph_harmonic_over_sin, unit_frame)
from .specfun import radial_pq


class ImpedanceKind(IntEnum):
    ZERO = 0       # eta = 0 (perfectly magnetic conducting face)
    INFINITE = 1   # eta = infinity (perfectly electric conducting face)
    SERIES = 2     # eta0 + sum_j eta_j(theta) r^j with eta0 != 0


@dataclass(frozen=True)
class ImpedanceSpec:
    kind: ImpedanceKind
    eta0: complex = 0.0
    higher: tuple = ()  # theta-dependent coefficient functions eta_j(theta)

    def __post_init__(self):
        if self.kind == ImpedanceKind.SERIES and self.eta0 == 0:
            raise ValueError("series impedance requires a nonzero constant term")

    @classmethod
    def zero(cls):
        return cls(ImpedanceKind.ZERO)

    @classmethod
    def infinite(cls):
        return cls(ImpedanceKind.INFINITE)

    @classmethod
    def series(cls, eta0, higher=()):
        return cls(ImpedanceKind.SERIES, complex(eta0), tuple(higher))

    def eta(self, r, theta):
        """Pointwise impedance value for the series kind."""
        if self.kind != ImpedanceKind.SERIES:
            raise ValueError("pointwise eta only defined for series impedance")
        val = self.eta0 + 0j
        rj = 1.0
        for fn in self.higher:
            rj = rj * r
            val = val + fn(theta) * rj
        return val


class Face(IntEnum):
    ONE = 1   # half-plane phi = 0
    TWO = 2   # half-plane phi = phi0


@dataclass(frozen=True)
class EdgeCornerConfig:
    alpha: Angle
    bc1: ImpedanceSpec
    bc2: ImpedanceSpec
    k: float

    def __post_init__(self):
        if self.k <= 0:
            raise ValueError("wavenumber must be positive")

    @property
    def phi0(self):
        return self.alpha.value * math.pi


def face_normal(config, face):
    """Exterior unit normal of the requested face."""
    if face == Face.ONE:
        return np.array([0.0, -1.0, 0.0])
    if face == Face.TWO:
        phi0 = config.phi0
        return np.array([-math.sin(phi0), math.cos(phi0), 0.0])
    raise ValueError(f"unknown face {face}")


def face_phi(config, face):
    return 0.0 if face == Face.ONE else config.phi0


def e_vectors(theta, phi):
    """The tangential pair e1 = thetahat, e2 = -rhat used by the face traces."""
    rhat, thetahat, _ = unit_frame(theta, phi)
    return thetahat, -rhat


def _face_series_components(coeffs, phi, r, theta):
    """Per-point series pieces of the trace formulas on a face.

    Returns (B, T, F) with B the radial piece sum_{l,m} -(1/L) b l(l+1) p Y,
    T the theta piece -(1/L)(a j (m/s)Y + b q Y_t) and F the phi piece
    -(i/L)(a j Y_t + b q (m/s)Y), plus the curl-side pieces (BC, TC, FC).
    """
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    shape = np.broadcast(r, theta).shape
    B = np.zeros(shape, dtype=complex)
    T = np.zeros(shape, dtype=complex)
    F = np.zeros(shape, dtype=complex)
    BC = np.zeros(shape, dtype=complex)
    TC = np.zeros(shape, dtype=complex)
    FC = np.zeros(shape, dtype=complex)
    k = coeffs.k
    for l, m, av, bv in coeffs.modes():
        L = math.sqrt(l * (l + 1))
        rad = radial_pq(l, k * r)
        y = sph_harmonic(l, m, theta, phi)
        yt = sph_harmonic_dtheta(l, m, theta, phi)
        ys = sph_harmonic_over_sin(l, m, theta, phi)
        B += -(1.0 / L) * bv * l * (l + 1) * rad.p * y
        T += -(1.0 / L) * (av * rad.j * ys + bv * rad.q * yt)
        F += -(1j / L) * (av * rad.j * yt + bv * rad.q * ys)
        # curl E = ik sum (b M - a N): same structure with (a,b) -> (b,-a)
        BC += (1j * k / L) * av * l * (l + 1) * rad.p * y
        TC += (1j * k / L) * (-bv * rad.j * ys + av * rad.q * yt)
        FC += (1j * k * 1j / L) * (-bv * rad.j * yt + av * rad.q * ys)
    return B, T, F, BC, TC, FC


def trace_tangential_E(coeffs, config, face, r, theta):
    """nu_j ^ E on face j, Cartesian, via the closed-form face series.

    The series carries a face-dependent orientation sign (+1 on face 1,
    -1 on face 2) because nu_1 = -phihat while nu_2 = +phihat.
    """
    phi = face_phi(config, face)
    B, T, _, _, _, _ = _face_series_components(coeffs, phi, r, theta)
    e1, e2 = e_vectors(theta, phi)
    sgn = 1.0 if face == Face.ONE else -1.0
    return sgn * (-(B[..., None] * e1) - (T[..., None] * e2))


def trace_tangential_curl(coeffs, config, face, r, theta):
    """nu_j ^ (curl E) on face j, Cartesian, via the face series."""
    phi = face_phi(config, face)
    _, _, _, BC, TC, _ = _face_series_components(coeffs, phi, r, theta)
    e1, e2 = e_vectors(theta, phi)
    sgn = 1.0 if face == Face.ONE else -1.0
    return sgn * (-(BC[..., None] * e1) - (TC[..., None] * e2))


def tangential_projection(coeffs, config, face, r, theta):
    """(nu ^ E) ^ nu = E - (nu . E) nu on the face, Cartesian."""
    phi = face_phi(config, face)
    E = eval_field(coeffs, (np.asarray(r, dtype=float),
                            np.asarray(theta, dtype=float), phi))
    nu = face_normal(config, face)
    return E - np.tensordot(E, nu, axes=([-1], [0]))[..., None] * nu


def impedance_residual(coeffs, config, face, spec, r, theta):
    """Boundary residual of the generalized impedance condition on a face.

    series:   nu ^ (curl E) + eta(r, theta) (nu ^ E) ^ nu
    zero:     nu ^ (curl E)
    infinite: (nu ^ E) ^ nu
    """
    if spec.kind == ImpedanceKind.INFINITE:
        return tangential_projection(coeffs, config, face, r, theta)
    curl_trace = trace_tangential_curl(coeffs, config, face, r, theta)
    if spec.kind == ImpedanceKind.ZERO:
        return curl_trace
    tang = tangential_projection(coeffs, config, face, r, theta)
    eta = spec.eta(np.asarray(r, dtype=float), np.asarray(theta, dtype=float))
    return curl_trace + np.asarray(eta)[..., None] * tang


def edge_vector_table(config):
    """Cross/dot products of nu_2 with the frame at theta = phi = 0.

    Returns dict with keys 'cross_r', 'cross_theta', 'cross_phi', 'dot_r',
    'dot_theta', 'dot_phi' (the evaluated table used on the edge).
    """
    s, c = math.sin(config.phi0), math.cos(config.phi0)
    return {
        "cross_r": np.array([c, s, 0.0]),
        "cross_theta": np.array([0.0, 0.0, -c]),
        "cross_phi": np.array([0.0, 0.0, -s]),
        "dot_r": 0.0,
        "dot_theta": -s,
        "dot_phi": c,
    }
