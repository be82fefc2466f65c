"""Edge-corner geometry: face normals, tangential traces and residuals.

The corner sits with its edge on the x3 axis, face 1 at phi = 0, face 2 at
phi = alpha*pi.  Traces computed from the closed-form series are compared
against plain geometric cross products of the evaluated field.
"""

import math

import numpy as np

from edgewave import corner, parse_angle, swe
from edgewave.corner import EdgeCornerConfig, Face, ImpedanceSpec

alpha = parse_angle("1/3")
cfg = EdgeCornerConfig(alpha, ImpedanceSpec.series(1.0 - 0.5j),
                       ImpedanceSpec.series(2.0), k=1.0)

print(f"Corner with dihedral angle {alpha} pi")
print(f"  face-1 normal: {corner.face_normal(cfg, Face.ONE)}")
print(f"  face-2 normal: {np.round(corner.face_normal(cfg, Face.TWO), 4)}")

rng = np.random.default_rng(1)
coeffs = swe.ModeCoefficients(
    3, cfg.k,
    a={(l, m): complex(*rng.standard_normal(2))
       for l in range(1, 4) for m in range(-l, l + 1)},
    b={(l, m): complex(*rng.standard_normal(2))
       for l in range(1, 4) for m in range(-l, l + 1)})

print("\nSeries traces vs geometric cross products:")
for face in (Face.ONE, Face.TWO):
    nu = corner.face_normal(cfg, face)
    phi = corner.face_phi(cfg, face)
    worst = 0.0
    for _ in range(20):
        r, th = rng.uniform(0.05, 0.7), rng.uniform(0.1, math.pi - 0.1)
        E = swe.eval_field(coeffs, (r, th, phi))
        tr = corner.trace_tangential_E(coeffs, cfg, face, r, th)
        worst = max(worst, np.linalg.norm(np.cross(nu, E) - tr))
    print(f"  face {int(face)}: worst |nu ^ E - series trace| = {worst:.2e}")

print("\nImpedance residual is compositional:")
r, th = 0.3, 1.1
res = corner.impedance_residual(coeffs, cfg, Face.ONE, cfg.bc1, r, th)
comp = (corner.trace_tangential_curl(coeffs, cfg, Face.ONE, r, th)
        + cfg.bc1.eta0 * corner.tangential_projection(coeffs, cfg, Face.ONE, r, th))
print(f"  residual vs curl-trace + eta (nu^E)^nu: max diff "
      f"{np.max(np.abs(res - comp)):.2e}")

print("\nA theta-dependent impedance series enters the residual pointwise:")
spec = ImpedanceSpec.series(1.0, higher=(np.cos,))
res2 = corner.impedance_residual(coeffs, cfg, Face.ONE, spec, r, th)
print(f"  |residual(eta = 1 + r cos theta)| = {np.linalg.norm(res2):.4f} vs "
      f"|residual(eta = 1)| = "
      f"{np.linalg.norm(corner.impedance_residual(coeffs, cfg, Face.ONE, ImpedanceSpec.series(1.0), r, th)):.4f}")

print("\nFirst-order coefficients obeying the leading PEC relations make the")
print("PEC residual vanish one order faster:")
good = swe.ModeCoefficients(1, cfg.k, b={(1, 1): 0.7, (1, -1): -0.7},
                            a={(1, 1): 1.1})
bad = swe.ModeCoefficients(1, cfg.k, b={(1, 1): 0.7, (1, -1): 0.7})
th = np.linspace(0.2, math.pi - 0.2, 7)
for label, c in (("b_1^1 + b_1^-1 = 0, b_1^0 = 0", good),
                 ("generic b coefficients       ", bad)):
    vals = [np.max(np.abs(corner.impedance_residual(
        c, cfg, Face.ONE, ImpedanceSpec.infinite(), r, th)))
        for r in (1e-3, 5e-4)]
    print(f"  {label}: |res|(1e-3) = {vals[0]:.2e}, ratio at r/2 = "
          f"{vals[0] / vals[1]:.3f}")
