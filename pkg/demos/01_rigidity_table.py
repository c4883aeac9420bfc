"""Second adjoint cohomology of the conformal Galilei algebras in two
spatial dimensions, two_ell = 0..5, compared with the published table.

Run:  python demos/01_rigidity_table.py
"""

from liecoh.report import EXPECTED_TABLE, diff_table, reproduce_table

header = ("algebra", "dim g", "dim Der", "dim B2", "dim Z2", "dim H2", "secs")
print("{:<22}{:>7}{:>9}{:>8}{:>8}{:>8}{:>7}".format(*header))

results = reproduce_table(workers=1)
for _, row, secs in results:
    print("{:<22}{:>7}{:>9}{:>8}{:>8}{:>8}{:>7.2f}".format(row.algebra, *row.values(), secs))

# Every row must obey the two bookkeeping identities below, whatever the
# published numbers say.
for _, row, _ in results:
    assert row.dim_H2 == row.dim_Z2 - row.dim_B2
    assert row.dim_B2 == row.dim_g**2 - row.dim_Der

print()
mismatches = diff_table(results)
if not mismatches:
    print("all rows agree with the published table")
for line in mismatches:
    print("differs from published:", line)

# The published half-integer row lists B2 = 54 and Z2 = 56. With dim g = 8 and
# dim Der = 9 the coboundary space has dimension 64 - 9 = 55, so that row
# cannot be right as printed; H2 = 2 agrees either way.
published = EXPECTED_TABLE[1]
print(
    f"\ntwo_ell=1: published B2 = {published.dim_B2}, "
    f"but dim g^2 - dim Der = {published.dim_g**2 - published.dim_Der}"
)
