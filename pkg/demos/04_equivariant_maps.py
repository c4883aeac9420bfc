"""Counting s-equivariant alternating maps Lambda^k V -> V.

For the conformal Galilei algebra with d = 3 and ell = 1 the radical V is
abelian and s = sl2 + so(3) acts on it as V(2) tensor C^3. The engine's
answer is compared with a count of weight multiplicities, done by hand
below with nothing but itertools.

Run:  python demos/04_equivariant_maps.py
"""

from collections import Counter
from itertools import combinations, product

from liecoh import build_cga, hom_invariants_dim

L, levi = build_cga(3, 2)

# Weights of V: sl2 weights {-2, 0, 2} times so(3) weights {-1, 0, 1}.
weights = list(product((-2, 0, 2), (-1, 0, 1)))


def character(k):
    return Counter(tuple(map(sum, zip(*ws))) for ws in combinations(weights, k))


def multiplicity(char, top):
    """Multiplicity of the irreducible with highest weight ``top`` in a
    character of sl2 + so(3), via the usual finite-difference formula."""
    a, b = top
    return (
        char[(a, b)] - char[(a + 2, b)] - char[(a, b + 1)] + char[(a + 2, b + 1)]
    )


for k in (1, 2, 3):
    engine = hom_invariants_dim(L, levi, k)
    by_weights = multiplicity(character(k), (2, 1))
    print(f"k={k}: engine {engine}, weight count {by_weights}")
