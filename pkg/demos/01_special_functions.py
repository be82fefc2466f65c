"""Tour of the real special functions underneath the wave machinery.

Shows the Legendre conventions, the two theta recursions against their
direct evaluations, the spherical Bessel recurrences, and the weighted
orthogonality integrals with their closed-form values.
"""

import math

from edgewave import specfun as sf

print("Associated Legendre functions (no Condon-Shortley phase)")
print(f"  P_3^0(1)   = {sf.assoc_legendre(3, 0, 1.0):+.6f}   (pole value 1)")
print(f"  P_2^1(1)   = {sf.assoc_legendre(2, 1, 1.0):+.6f}   (orders >= 1 vanish)")
print(f"  P_2^1(0.5) = {sf.assoc_legendre(2, 1, 0.5):+.6f}   "
      f"(closed form 3 x sqrt(1-x^2) = {3 * 0.5 * math.sin(math.pi / 3):+.6f})")
print(f"  P_1^1(0)   = {sf.assoc_legendre(1, 1, 0.0):+.6f}   (sin at the equator)")

print("\nNegative orders through (-1)^m (l-m)!/(l+m)! P_l^m:")
for m in (1, 2):
    lhs = sf.assoc_legendre(3, -m, 0.4)
    rhs = (-1) ** m * sf.factorial(3 - m) / sf.factorial(3 + m) \
        * sf.assoc_legendre(3, m, 0.4)
    print(f"  P_3^-{m}(0.4) = {lhs:+.8f}    relation gives {rhs:+.8f}")

print("\nTheta-derivative recursion vs central finite differences:")
for l, m in ((1, 1), (4, 2), (7, 0)):
    theta = 0.9
    h = 1e-6
    fd = (sf.assoc_legendre(l, m, math.cos(theta + h))
          - sf.assoc_legendre(l, m, math.cos(theta - h))) / (2 * h)
    rec = sf.legendre_dtheta(l, m, theta)
    print(f"  l={l} m={m}: recursion {rec:+.8f}, finite difference {fd:+.8f}")

print("\nm/sin(theta) recursion is finite on the axis:")
print(f"  (1/sin t) P_2^1(cos t) at t -> 0: {sf.legendre_over_sin(2, 1, 0.0):+.4f}"
      "   (limit of 3 cos t)")
print(f"  same at t = pi/4: {sf.legendre_over_sin(2, 1, math.pi / 4):+.6f} vs "
      f"direct quotient "
      f"{sf.assoc_legendre(2, 1, math.cos(math.pi/4)) / math.sin(math.pi/4):+.6f}")

print("\nSpherical Bessel functions and their recurrences:")
t = 0.5
print(f"  j_1(0.5) = {sf.sph_bessel(1, t):.10f} "
      f"(closed form {math.sin(t)/t**2 - math.cos(t)/t:.10f})")
for l in (1, 5, 10):
    lhs = sf.sph_bessel(l, 2.0) / 2.0
    rhs = (sf.sph_bessel(l - 1, 2.0) + sf.sph_bessel(l + 1, 2.0)) / (2 * l + 1)
    print(f"  j_{l}(t)/t vs neighbor average at t=2: "
          f"difference {abs(lhs - rhs):.2e}")

print("\nRadial factors p_l, q_l (leading power r^(l-1)):")
rad = sf.radial_pq(1, 0.0)
print(f"  p_1(0) = {rad.p:.6f} (= 1/3),  q_1(0) = {rad.q:.6f} (= 2/3)")
t = 1e-6
rad = sf.radial_pq(2, t)
print(f"  p_2(t)/t -> {rad.p / t:.6f} (= 1/15), q_2(t)/t -> {rad.q / t:.6f} (= 1/5)")

print("\nWeighted orthogonality of same-degree Legendre functions:")
print(f"  (n,m,l) = (2,1,2): {sf.orthogonality_integral(2, 1, 2):+.2e}  (zero)")
print(f"  (n,m,l) = (2,1,1): {sf.orthogonality_integral(2, 1, 1):+.6f}  "
      f"(closed form {sf.orthogonality_closed_form(2, 1):.1f})")
print(f"  (n,m,l) = (4,2,2): {sf.orthogonality_integral(4, 2, 2):+.4f}  "
      f"(closed form {sf.orthogonality_closed_form(4, 2):.1f})")
