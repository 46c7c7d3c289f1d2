"""Contragenic fields: harmonic, yet orthogonal to every ambigenic field.

Counts dimensions per degree (harmonic fields minus ambigenic fields leaves
2n-1 directions), prints the contragenic basis, and runs both contragenicity
tests: exact Gram pairings and the boundary flux criterion.
"""

from contragenic import (
    TriPoly,
    VecField,
    ambigenic_basis,
    contragenic_basis,
    dimension_table,
    inner_product,
    is_contragenic,
    star_on_contragenics,
    surface_criterion,
)

print("Dimension table (computed by exact Gram-matrix ranks):")
print("  n | scalar harmonics | monogenic | constants | ambigenic | all harmonic fields")
for n in range(5):
    row = dimension_table(n)
    print(
        f"  {n} | {row.scalar_harmonics:16d} | {row.monogenic:9d} |"
        f" {row.monogenic_constants:9d} | {row.ambigenic:9d} | {row.harmonic_fields:8d}"
    )
print("  gap = (6n+3) - (4n+4) = 2n-1 contragenic directions per degree n >= 1")

print("\nThe contragenic bases of degrees 1..3:")
for n in (1, 2, 3):
    for z in contragenic_basis(n):
        print(f"  {z.label}({n},{z.m}) = {z.field}")

z10 = contragenic_basis(1)[0].field
print("\nZ0(1) against every degree-1 ambigenic basis element:")
for a in ambigenic_basis(1):
    print(f"  <Z0(1), {a.kind}(1,{a.m})> = {inner_product(z10, a.field)}")

print("\nBoundary flux criterion (equivalent to the volume test):")
print("  Z0(1):", surface_criterion(z10, 1))
x2e1 = VecField(TriPoly.zero(), TriPoly.variable(2), TriPoly.zero())
print("  x2*e1:", surface_criterion(x2e1, 1), " (not contragenic)")
cert = is_contragenic(x2e1)
print("  certificate for x2*e1:", [(d, lbl, str(v)) for d, lbl, v in cert.failures])

print("\nThe star involution (x1 <-> x2, e1 <-> e2) permutes each Z-basis:")
report = star_on_contragenics(3)
for image in report.images:
    terms = ", ".join(f"{c} * {lbl}" for lbl, c in image.coefficients)
    print(f"  star {image.source} = {terms}")
print("  change of basis invertible:", report.invertible)
