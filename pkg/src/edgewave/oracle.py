"""Brute-force verification: ball integrals of |E|, vanishing-order estimation
from the integral decay rate, and collocation-based nullspace computation.

The collocation path builds constraint rows by numerically sampling boundary
residuals of unit-coefficient basis fields at collocation points and
Richardson-extrapolating the leading radial coefficients, rather than by the
closed-form row formulas of the structured assembler.  Leading-order
extraction uses a polynomial fit over a geometric radius grid (ratio 2), so
the oracle stays independent of the series coefficients used elsewhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import corner as _corner
from .corner import (EdgeCornerConfig, Face, ImpedanceSpec, face_normal,
                     impedance_residual, tangential_projection,
                     trace_tangential_curl)
from .swe import ModeCoefficients, eval_field, norm_constant
from .specfun import assoc_legendre, radial_pq
from .vanish import CaseKind, case_of_config, nullspace_dim, reflected_angle


class QuadratureConvergenceError(RuntimeError):
    pass


class FitQualityError(RuntimeError):
    pass


class ExtrapolationError(RuntimeError):
    pass


@dataclass(frozen=True)
class QuadratureSpec:
    radial_nodes: int = 24
    angular_nodes: int = 24
    mc_samples: Optional[int] = None
    seed: int = 42

    def __post_init__(self):
        if self.radial_nodes < 8 or self.angular_nodes < 8:
            raise ValueError("node counts must be >= 8")
        if self.mc_samples is not None and self.mc_samples < 8:
            raise ValueError("mc_samples must be >= 8")


def _field_magnitude(field, r, theta, phi):
    """|E| on a broadcastable grid; field is ModeCoefficients or a callable
    mapping (r, theta, phi) arrays to an (..., 3) complex array."""
    if isinstance(field, ModeCoefficients):
        E = eval_field(field, (r, theta, phi))
    else:
        E = field(r, theta, phi)
    return np.linalg.norm(E, axis=-1)


def _ball_quadrature(field, rho, nr, nth, nphi):
    # Gauss-Legendre in r over [0, rho] and in x = cos(theta); periodic
    # trapezoid in phi.  Jacobian r^2 sin(theta) with the sin absorbed by the
    # x substitution.
    xr, wr = np.polynomial.legendre.leggauss(nr)
    r = 0.5 * rho * (xr + 1.0)
    wr = 0.5 * rho * wr
    xt, wt = np.polynomial.legendre.leggauss(nth)
    theta = np.arccos(np.clip(xt, -1, 1))
    phi = 2 * math.pi * np.arange(nphi) / nphi
    wphi = 2 * math.pi / nphi
    mag = _field_magnitude(field, r[:, None, None], theta[None, :, None],
                           phi[None, None, :])
    inner = (mag * wt[None, :, None]).sum(axis=1).sum(axis=1) * wphi
    return float(np.sum(wr * r * r * inner))


def ball_integral(field, rho, quad=None, check_convergence=True, rtol=1e-6):
    """Integral of |E| over the ball of radius rho around the corner point.

    field is a ModeCoefficients table or a callable (r, theta, phi) -> E.
    With check_convergence the quadrature is repeated on a refined grid and a
    relative disagreement above rtol raises QuadratureConvergenceError.
    """
    if rho <= 0:
        raise ValueError("radius must be positive")
    quad = quad or QuadratureSpec()
    nphi = 2 * quad.angular_nodes
    val = _ball_quadrature(field, rho, quad.radial_nodes, quad.angular_nodes, nphi)
    if check_convergence:
        ref = _ball_quadrature(field, rho, quad.radial_nodes + 8,
                               quad.angular_nodes + 8, nphi + 16)
        scale = max(abs(val), abs(ref))
        if scale > 0 and abs(val - ref) > 10 * rtol * scale:
            raise QuadratureConvergenceError(
                f"ball integral at rho={rho}: {val!r} vs refined {ref!r}")
        val = ref
    return val


def ball_integral_mc(field, rho, quad):
    """Monte-Carlo cross-check of the ball integral (uniform ball sampling)."""
    if quad.mc_samples is None:
        raise ValueError("QuadratureSpec.mc_samples is not set")
    rng = np.random.default_rng(quad.seed)
    n = quad.mc_samples
    u = rng.random(n)
    r = rho * u ** (1.0 / 3.0)
    theta = np.arccos(1.0 - 2.0 * rng.random(n))
    phi = 2 * math.pi * rng.random(n)
    mag = _field_magnitude(field, r, theta, phi)
    volume = 4.0 / 3.0 * math.pi * rho ** 3
    return volume * float(np.mean(mag))


DEFAULT_RADII = (1e-1, 3e-2, 1e-2, 3e-3, 1e-3)


@dataclass
class VaniEstimate:
    radii: tuple
    integrals: tuple
    slope: float
    estimated_order: int
    r_squared: float


def vani_estimate(coeffs, radii=DEFAULT_RADII, quad=None):
    """Least-squares slope of log I(rho) vs log rho; order = slope - 3.

    The integral of |E| over B_rho scales like rho^(N+3) when the field
    vanishes to order N, so the fitted slope estimates N + 3.
    """
    radii = tuple(sorted(radii, reverse=True))
    if len(radii) < 4 or radii[0] / radii[-1] < 99:
        raise ValueError("need >= 4 radii spanning at least two decades")
    vals = [ball_integral(coeffs, rho, quad=quad, check_convergence=False)
            for rho in radii]
    x = np.log(np.asarray(radii))
    y = np.log(np.asarray(vals))
    slope, intercept = np.polyfit(x, y, 1)
    fit = slope * x + intercept
    ss_res = float(np.sum((y - fit) ** 2))
    ss_tot = float(np.sum((y - np.mean(y)) ** 2))
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else 1.0
    if r2 < 0.999:
        raise FitQualityError(f"log-log fit R^2 = {r2:.6f} < 0.999")
    return VaniEstimate(radii=radii, integrals=tuple(vals), slope=float(slope),
                        estimated_order=int(round(slope - 3.0)), r_squared=r2)


# ---------------------------------------------------------------------------
# collocation nullspace
# ---------------------------------------------------------------------------

def _unit_basis(n, k):
    """Unit-coefficient order-n basis fields in the assembler's column order."""
    return [ModeCoefficients(n, k,
                             a={(n, m): 1.0} if fam == "a" else None,
                             b={(n, m): 1.0} if fam == "b" else None)
            for fam, m in _column_order(n)]


def _column_order(n):
    cols = [("b", 0), ("a", 0)]
    for m in range(1, n + 1):
        cols += [("a", m), ("a", -m), ("b", m), ("b", -m)]
    return cols


def _radial_coefficients(values, radii, n, orders=(0,)):
    """Coefficients of r^{n-1+j}, j in orders, from sampled values.

    values has shape (nr, ...); a cubic in r is fitted to values / r^{n-1}
    over the (scaled) radius grid.  The overdetermined fit residual guards
    against extrapolation instability.
    """
    radii = np.asarray(radii)
    h = radii[0]
    g = values / (radii.reshape(-1, *([1] * (values.ndim - 1))) ** (n - 1))
    V = np.vander(radii / h, 4, increasing=True)
    flat = g.reshape(len(radii), -1)
    coef, res, rank, sv = np.linalg.lstsq(V, flat, rcond=None)
    scale = np.max(np.abs(flat)) or 1.0
    if len(radii) > 4 and res.size:
        if np.max(res) ** 0.5 > 1e-5 * scale:
            raise ExtrapolationError(
                f"radial fit residual {np.max(res)**0.5:.2e} vs scale {scale:.2e}")
    out = []
    for j in orders:
        out.append((coef[j] / h ** j).reshape(values.shape[1:]))
    return out


def _face_spec(config, face):
    return config.bc1 if face == Face.ONE else config.bc2


def _sample_rows_true(n, config, thetas, radii, orders):
    """Rows from the geometric boundary residual of every basis field.

    Returns an array (nrows, 2(2n+1)): for each face, theta sample and
    Cartesian component, the extracted r^{n-1+j} coefficients (j in orders).
    """
    basis = _unit_basis(n, config.k)
    rows = []
    r_grid = np.asarray(radii)
    for face in (Face.ONE, Face.TWO):
        spec = _face_spec(config, face)
        per_field = []
        for coeffs in basis:
            res = impedance_residual(coeffs, config, face, spec,
                                     r_grid[:, None], np.asarray(thetas)[None, :])
            per_field.append(_radial_coefficients(res, r_grid, n, orders))
        # per_field[f][j] has shape (ntheta, 3)
        for j_idx in range(len(orders)):
            block = np.stack([pf[j_idx] for pf in per_field], axis=-1)
            rows.append(block.reshape(-1, len(basis)))
    return np.concatenate(rows, axis=0)


def _sampled_head_row(n, config, thetas, radii):
    """First-order head relation sampled from the face-1 series.

    Samples the combination -nu1 ^ (curl E) + eta1 (nu1 ^ E) ^ nu1 (the
    orientation under which the first-order head block closes), extracts the
    r^{n-1} coefficient of its e2 component and projects the theta dependence
    on the P_n^0 direction.
    """
    basis = _unit_basis(n, config.k)
    spec = _face_spec(config, Face.ONE)
    thetas = np.asarray(thetas)
    r_grid = np.asarray(radii)
    e2 = _corner.e_vectors(thetas, 0.0)[1]           # (ntheta, 3)
    cols = []
    for coeffs in basis:
        res = (-trace_tangential_curl(coeffs, config, Face.ONE,
                                      r_grid[:, None], thetas[None, :])
               + spec.eta0 * tangential_projection(coeffs, config, Face.ONE,
                                                   r_grid[:, None], thetas[None, :]))
        lead = _radial_coefficients(res, r_grid, n, (0,))[0]   # (ntheta, 3)
        cols.append(np.sum(lead * e2, axis=-1))
    sampled = np.stack(cols, axis=-1)                # (ntheta, nbasis)
    # least-squares split over the degree-n Legendre components; keep mu = 0
    basis_mat = np.stack([assoc_legendre(n, mu, np.cos(thetas))
                          for mu in range(0, n + 1)], axis=-1)
    proj, *_ = np.linalg.lstsq(basis_mat, sampled, rcond=None)
    return proj[0]


def _numeric_edge_rows(n, config):
    """The six edge relations with every entry rebuilt numerically.

    The radial weights are extracted from sampled p_n, q_n leading behavior
    and the trig factors from the face-2 normal, instead of the closed-form
    constants used by the assembler.
    """
    k = config.k
    rr = np.array([1e-3, 5e-4, 2.5e-4, 1.25e-4])
    rad = radial_pq(n, k * rr)
    plead = _radial_coefficients(rad.p.reshape(-1, 1), rr, n, (0,))[0][0]
    qlead = _radial_coefficients(rad.q.reshape(-1, 1), rr, n, (0,))[0][0]
    nu2 = face_normal(config, Face.TWO)
    s, co = -nu2[0], nu2[1]
    c0, c1 = norm_constant(n, 0), norm_constant(n, 1)
    L = n * (n + 1)
    sL = math.sqrt(L)
    Kp = (L / 2.0) * c1 * qlead / sL
    Ap = L * c0 * plead / sL
    eta1 = config.bc1.eta0
    eta2 = config.bc2.eta0
    ncols = 2 * (2 * n + 1)
    ix = {c: i for i, c in enumerate(_column_order(n))}
    rows = []

    def build(ap, am, bp, bm, b0, a0):
        row = np.zeros(ncols, dtype=complex)
        row[ix[("a", 1)]], row[ix[("a", -1)]] = ap, am
        row[ix[("b", 1)]], row[ix[("b", -1)]] = bp, bm
        row[ix[("b", 0)]], row[ix[("a", 0)]] = b0, a0
        rows.append(row)

    build(1j * k * Kp * s * s - k * Kp * s * co,
          1j * k * Kp * s * s + k * Kp * s * co, 0, 0,
          -(eta1 + eta2 * co) * Ap, 0)
    build(-1j * k * Kp * s * co - k * Kp * s * s,
          -1j * k * Kp * s * co + k * Kp * s * s, 0, 0, -eta2 * s * Ap, 0)
    build(0, 0, (eta1 - eta2 * co) * Kp + 1j * eta2 * s * Kp,
          (eta1 - eta2 * co) * Kp - 1j * eta2 * s * Kp, 0, 0)
    build(0, 0, -eta2 * co * co * Kp + 1j * eta2 * s * co * Kp,
          -eta2 * co * co * Kp - 1j * eta2 * s * co * Kp, 0, 1j * k * co * Ap)
    build(0, 0, eta2 * s * co * Kp + 1j * eta2 * s * s * Kp,
          eta2 * s * co * Kp - 1j * eta2 * s * s * Kp, 0, 1j * k * s * Ap)
    build(1j * k * Kp * co + k * Kp * s, 1j * k * Kp * co - k * Kp * s,
          0, 0, eta2 * Ap, 0)
    return np.array(rows)


def _reflected_config(config, case):
    eff = reflected_angle(config.alpha, case)
    spec = ImpedanceSpec.series(config.bc2.eta0, config.bc2.higher)
    new = EdgeCornerConfig.__new__(EdgeCornerConfig)
    object.__setattr__(new, "alpha", eff)
    object.__setattr__(new, "bc1", spec)
    object.__setattr__(new, "bc2", spec)
    object.__setattr__(new, "k", config.k)
    return new


def collocation_nullspace(n, config, samples=None, seed=42, tol=1e-9,
                          base_radius=None):
    """Nullspace dimension of the order-n boundary conditions by collocation.

    The residual of each unit-coefficient order-n basis field is sampled at
    random polar angles on both faces over a geometric radius grid and the
    leading radial coefficients are Richardson-extrapolated into constraint
    rows.  For PEC/PMC faces both the r^{n-1} and the r^n coefficients are
    kept (the second-lowest order carries the coupling relations; a pure
    order-n basis field has no higher-degree contamination there).  For the
    impedance-impedance pairing the sampled face rows are completed by the
    six edge relations with numerically rebuilt entries; mixed pairings are
    collocated on the reflected configuration.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    min_samples = 4 * (2 * (2 * n + 1))
    if samples is None:
        samples = min_samples
    if samples < min_samples:
        raise ValueError(f"need samples >= {min_samples}")
    rng = np.random.default_rng(seed)
    case = case_of_config(config)
    if case in (CaseKind.IMP_PEC, CaseKind.IMP_PMC):
        config = _reflected_config(config, case)
        case = CaseKind.IMP_IMP
    k = config.k
    h = base_radius if base_radius is not None else min(2e-3, 0.2 / k)
    radii = h * 0.5 ** np.arange(5)
    ntheta = max(4, int(math.ceil(samples / (2 * len(radii)))))
    thetas = rng.uniform(0.15, math.pi - 0.15, ntheta)
    if case == CaseKind.PEC_PMC:
        rows = _sample_rows_true(n, config, thetas, radii, orders=(0, 1))
        return nullspace_dim(rows, tol=tol)
    # impedance-impedance
    edge = _numeric_edge_rows(n, config)
    if n == 1:
        head = _sampled_head_row(n, config, thetas, radii)
        rows = np.vstack([edge, head[None, :]])
    else:
        face_rows = _sample_rows_true(n, config, thetas, radii, orders=(0,))
        rows = np.vstack([edge, face_rows])
    return nullspace_dim(rows, tol=tol)
