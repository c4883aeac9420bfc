"""Invariant cohomology of the radical and the Hochschild-Serre count.

For g = s + r with s semisimple, H^2(g, g) decomposes as a sum of
H^m(s) * H^n(r, g)^s over m + n = 2. This script computes each factor
separately and compares the total with a direct computation on g.

Run:  python demos/03_invariants_and_hochschild_serre.py
"""

from liecoh import (
    adjoint_rep,
    build_cga,
    build_mass_extension,
    hochschild_serre_check,
    invariant_cohomology,
)

cases = [
    ("cga", build_cga, 2, 1),
    ("cga", build_cga, 2, 6),
    ("cga", build_cga, 3, 2),
    ("mass", build_mass_extension, 2, 3),
]

for name, make, d, two_ell in cases:
    L, levi = make(d, two_ell)
    R = adjoint_rep(L)
    inv = invariant_cohomology(L, levi, R, 2)
    hs = hochschild_serre_check(L, levi, R, 2)
    print(f"{name}(d={d}, two_ell={two_ell}): dim g = {L.dim}, dim s = {len(levi.semisimple)}")
    print(f"  invariant 2-cocycles {inv.dim_Z_inv}, coboundaries {inv.dim_B_inv}, H^2(r, g)^s = {inv.dim_H_inv}")
    terms = " + ".join(
        f"{hs.semisimple_terms.get(2 - n, 0)}*{rep.dim_H_inv}"
        for n, rep in sorted(hs.invariant_terms.items())
    )
    print(f"  prediction sum of dim H^(2-n)(s) * dim H^n(r, g)^s = {terms} = {hs.predicted_dim}; direct H^2(g, g) = {hs.direct_dim}")
    print("  agree" if hs.match else "  DISAGREE")
