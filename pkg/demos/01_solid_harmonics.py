"""Solid spherical harmonics as exact polynomials.

Builds the degree-n harmonics U(n, m), V(n, m) in cartesian form, confirms
they are exactly harmonic, and prints their closed-form squared norms over
the unit ball next to the exactly computed inner products.
"""

from contragenic import degree_basis, inner_product, solid_harmonic, uv_norm_sq

print("A few solid harmonics in cartesian coordinates:")
for kind, n, m in [("U", 0, 0), ("U", 1, 0), ("U", 1, 1), ("V", 1, 1), ("U", 2, 0), ("U", 2, 1), ("V", 3, 2)]:
    h = solid_harmonic(kind, n, m)
    print(f"  {kind}({n},{m}) = {h.poly}")
    assert h.poly.laplacian().is_zero()

print("\nDegree-3 basis: norm^2 from the closed form vs the exact integral")
for h in degree_basis(3):
    exact = inner_product(h.as_field(), h.as_field())
    closed = uv_norm_sq(h.kind, 3, h.m)
    marker = "ok" if exact == closed else "MISMATCH"
    print(f"  ||{h.kind}(3,{h.m})||^2 = {exact}  (closed form {closed})  {marker}")

print("\nOrthogonality inside a degree (every off-diagonal pairing is exactly 0):")
basis = degree_basis(2)
for i, f in enumerate(basis):
    row = []
    for g in basis:
        value = inner_product(f.as_field(), g.as_field())
        row.append(str(value))
    print("  [" + ", ".join(f"{v:>9s}" for v in row) + "]")
