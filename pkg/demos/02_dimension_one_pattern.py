"""Which one-dimensional conformal Galilei algebras admit a nontrivial
infinitesimal deformation?  We scan two_ell = 0..8 and print dim H^2.

Run:  python demos/02_dimension_one_pattern.py
"""

from liecoh import build_cga, cohomology

print("two_ell  ell   dim g  dim H2")
for two_ell in range(9):
    L, _ = build_cga(1, two_ell)
    h2 = cohomology(L, None, [2])[2].dim_H
    print(f"{two_ell:>7}  {two_ell / 2:<4}  {L.dim:>5}  {h2:>6}")

# H^2 is nonzero exactly when ell is an odd integer (dim g = 2 mod 4) or
# ell = 2. For odd ell the representation Lambda^2 V_{2 ell} contains
# V_{2 ell} once, which is where the extra cocycle comes from.
