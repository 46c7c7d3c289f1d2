"""Floating quadrature versus the exact closed forms.

An independent numerical check: nested Gauss-Legendre x uniform-azimuth
quadrature over the unit ball reproduces the symbolic q*pi inner products to
near machine precision once the rule is sized for the polynomial degree, and
visibly aliases when undersized.
"""

import random
from fractions import Fraction

from contragenic import TriPoly, VecField, inner_product, solid_harmonic
from contragenic.quadrature import quad_crosscheck, required_nodes

u10 = solid_harmonic("U", 1, 0).as_field()
report = quad_crosscheck(u10, u10)
print("<U(1,0), U(1,0)>:")
print(f"  exact      = {inner_product(u10, u10)} = {report.exact_value!r}")
print(f"  quadrature = {report.quad_value!r}")
print(f"  rel error  = {report.rel_error:.2e} with nodes {report.nodes}")

print("\nRule sizing for exactness at polynomial degree d:")
for d in (2, 8, 16):
    print(f"  degree {d}: radial x polar x azimuthal = {required_nodes(d)}")

big = VecField.from_scalar(TriPoly.monomial((4, 2, 2)))
print("\nDeliberately undersized rule on a degree-16 integrand:")
print(f"  matched rule: rel error = {quad_crosscheck(big, big).rel_error:.2e}")
print(f"  order-4 rule: rel error = {quad_crosscheck(big, big, order=4).rel_error:.2e} (aliased)")

print("\n20 random degree <= 6 pairs:")
rng = random.Random(2)
worst = 0.0
for _ in range(20):
    f = VecField(*(TriPoly({(rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2)):
                            Fraction(rng.randint(-5, 5), rng.randint(1, 5))}) for _ in range(3)))
    g = VecField(*(TriPoly({(rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2)):
                            Fraction(rng.randint(-5, 5), rng.randint(1, 5))}) for _ in range(3)))
    r = quad_crosscheck(f, g)
    worst = max(worst, r.rel_error if r.exact_value else r.abs_error)
print(f"  worst error: {worst:.2e}")
