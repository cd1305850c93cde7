"""
Equimodular curves and diverging Mahler measures
================================================

Zeros of c1 l1^n + c2 l2^n pile up on the curve |l1(z)| = |l2(z)|.  If a
non-isolated point of that curve lies outside the unit circle, the Mahler
measures of the family grow without bound.  The curve is traced as the
roots of v(t, z) = -(l1 + l2)^2 + t l1 l2 for t in [0, 4].
"""

import sys

from wpoly.family import SURGERY_NAMES, builtin_family
from wpoly.zeros import divergence_certificate, equimodular_points, mahler_trend, roots

twist = builtin_family("twist")
two_one = builtin_family("2-1")

# Twist links: l1/l2 is a power of A, so the curve is the unit circle and
# no certificate can exist.
print("twist family:", divergence_certificate(twist).summary())
for n, M, Me in mahler_trend(twist, [5, 10, 20, 40]):
    print(f"  n={n:3d}  M={M:.9f}")

# The [-2,-1] family has curve points well outside the unit circle.
print("\n[-2,-1] family:", divergence_certificate(two_one).summary())
for n, M, Me in mahler_trend(two_one, [5, 10, 20, 30]):
    print(f"  n={n:3d}  M={M:.6g}")

# Zeros of one member sit close to the curve; compare the largest moduli.
pts = equimodular_points(two_one.lambda1, two_one.lambda2)
print("\nlargest |z| on the curve:", max(p.modulus for p in pts))
print("largest |z| among zeros of <L_30>:", roots(two_one.bracket(30)).moduli.max())

print("\nall surgery families:")
for name in SURGERY_NAMES:
    print(f"  {name:6s}", divergence_certificate(builtin_family(name)).summary())

# Write the curve as CSV for plotting elsewhere:  python 04_mahler_divergence.py curve.csv
if len(sys.argv) > 1:
    with open(sys.argv[1], "w") as fh:
        fh.write("t,re,im,isolated\n")
        for p in pts:
            fh.write(f"{p.t:.12g},{p.z.real:.12g},{p.z.imag:.12g},{int(p.isolated_flag)}\n")
