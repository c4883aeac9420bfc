"""Working with your own structure constants.

Builds a small solvable algebra from a bracket table, checks the Jacobi
identity, round-trips it through JSON, and computes Betti numbers and
derivations. Also shows what happens when the table is not a Lie algebra.

Run:  python demos/05_custom_algebra.py
"""

import json
from fractions import Fraction

from liecoh import (
    JacobiError,
    cohomology,
    derivation_space,
    jacobi_violations,
    lie_algebra_from_json,
    lie_algebra_to_json,
    make_lie_algebra,
    trivial_rep,
)

# A 4-dimensional algebra: x acts on the Heisenberg algebra <p, q, z>
# by [x, p] = p, [x, q] = -q/2, [x, z] = z/2, with [p, q] = z.
table = {
    (0, 1): {1: 1},
    (0, 2): {2: Fraction(-1, 2)},
    (0, 3): {3: Fraction(1, 2)},
    (1, 2): {3: 1},
}
L = make_lie_algebra(4, ["x", "p", "q", "z"], table)
print("Jacobi violations:", jacobi_violations(L))

text = json.dumps(lie_algebra_to_json(L), indent=1)
again = lie_algebra_from_json(text)
print("JSON round trip preserves the algebra:", lie_algebra_to_json(again) == lie_algebra_to_json(L))

betti = cohomology(L, trivial_rep(L, 1), range(L.dim + 1)).dims()
print("Betti numbers:", [betti[n] for n in range(L.dim + 1)])
print("Euler characteristic:", sum((-1) ** n * b for n, b in betti.items()))

adj = cohomology(L, None, [0, 1, 2])
print("adjoint H^0, H^1, H^2:", [adj[n].dim_H for n in range(3)])
print("dim Der:", derivation_space(L).dim)

try:
    make_lie_algebra(3, None, {(0, 1): {2: 1}, (0, 2): {0: 1}})
except JacobiError as exc:
    print("rejected table:", exc)
