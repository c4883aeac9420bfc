"""Action of an algebra on cochains of an ideal, invariant cohomology and the
Hochschild-Serre cross-check.

For an ideal ``r`` of ``g`` and a ``g``-module ``M``, ``x in g`` acts on
``C^n(r, M)`` by

    (x.w)(e_1..e_n) = x.w(e_1..e_n) - sum_i w(e_1, .., [x, e_i], .., e_n).

Cochains of ``r`` use the re-indexed basis of ``r`` (positions in the Levi
radical tuple), so ``differential_matrix`` and ``action_matrix`` share one
indexing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cochains import CochainIndexing, _insert, _subsets, cohomology, combo_rank, differential_matrix
from .linalg import SparseMatrix, SubspaceBasis, image_basis, intersect, kernel_basis
from .lie import (
    LeviData,
    LieAlgebra,
    LieValidationError,
    Representation,
    check_levi,
    is_ideal,
    restrict_rep,
    subalgebra,
    submodule_rep,
    trivial_rep,
)

__all__ = [
    "HSReport",
    "InvariantReport",
    "action_matrix",
    "hochschild_serre_check",
    "hom_invariants_dim",
    "invariant_cohomology",
]


def action_matrix(
    L: LieAlgebra, r: tuple[int, ...], R: Representation, n: int, x: int
) -> SparseMatrix:
    """Matrix of ``w -> e_x . w`` on ``C^n(r, M)``."""
    r = tuple(r)
    if not is_ideal(L, r):
        raise LieValidationError("cochains can only be acted on for an ideal")
    pos = {g: i for i, g in enumerate(r)}
    dr, m = len(r), R.module_dim
    idx = CochainIndexing(dr, m, n)
    # [e_x, e_t] restricted to r: for each target k, the sources t with coefficient
    into: dict[int, list[tuple[int, Fraction]]] = {}
    for t in r:
        for k, c in L.structure(x, t).items():
            into.setdefault(pos[k], []).append((pos[t], c))
    act = R._columns()[x]
    rows: dict[int, dict[int, Fraction]] = {}

    def add(i: int, j: int, v: Fraction):
        row = rows.setdefault(i, {})
        y = row.get(j, 0) + v
        if y:
            row[j] = y
        else:
            del row[j]

    for srank, S in enumerate(_subsets(dr, n)):
        base = srank * m
        for a in range(m):
            for b, v in act.get(a, {}).items():
                add(base + b, base + a, v)
        # w(.., [x, e_t], ..) hits S when t replaces some k in S
        for kpos, k in enumerate(S):
            rest = S[:kpos] + S[kpos + 1:]
            for t, c in into.get(k, ()):
                ins = _insert(rest, t)
                if ins is None:
                    continue
                T, tpos = ins
                # argument tuple is T with e_t swapped for e_k; sorting it
                # moves k from slot tpos to slot kpos
                sign = -1 if (tpos - kpos) % 2 else 1
                trow = combo_rank(T) * m
                for a in range(m):
                    add(trow + a, base + a, -sign * c)
    return SparseMatrix._from_rows(idx.dim, idx.dim, rows)


@dataclass(frozen=True)
class InvariantReport:
    degree: int
    dim_Z_inv: int
    dim_B_inv: int
    invariant_cocycle_basis: SubspaceBasis | None = field(default=None, compare=False)

    @property
    def dim_H_inv(self) -> int:
        return self.dim_Z_inv - self.dim_B_inv

    def as_dict(self) -> dict[str, int]:
        return {
            "degree": self.degree,
            "dim_Z_inv": self.dim_Z_inv,
            "dim_B_inv": self.dim_B_inv,
            "dim_H_inv": self.dim_H_inv,
        }


def _require_levi(L: LieAlgebra, levi: LeviData) -> None:
    report = check_levi(L, levi, trusted=True)
    if not report.valid:
        raise LieValidationError("invalid Levi data: " + "; ".join(report.problems))


def invariant_cohomology(
    L: LieAlgebra, levi: LeviData, R: Representation, q: int, *, basis: bool = False
) -> InvariantReport:
    """``s``-invariant cocycles and coboundaries of the radical in degree ``q``.

    ``Z_inv`` is the kernel of ``d^q`` stacked on the action matrices of every
    semisimple basis element; ``B_inv = B^q(r, M) ∩ Z_inv``.
    """
    _require_levi(L, levi)
    rad = levi.radical
    Rr = restrict_rep(R, rad)
    Lr = Rr.algebra
    blocks = [differential_matrix(Lr, Rr, q)]
    blocks += [action_matrix(L, rad, R, q, x) for x in levi.semisimple]
    z_inv = kernel_basis(SparseMatrix.vstack(blocks))
    if q == 0 or not z_inv.dim:
        b_inv = SubspaceBasis(z_inv.ambient_dim, [])
    else:
        b_inv = intersect(image_basis(differential_matrix(Lr, Rr, q - 1)), z_inv)
    return InvariantReport(q, z_inv.dim, b_inv.dim, z_inv if basis else None)


@dataclass(frozen=True)
class HSReport:
    degree: int
    predicted_dim: int
    direct_dim: int
    semisimple_terms: dict[int, int] = field(default_factory=dict)
    invariant_terms: dict[int, InvariantReport] = field(default_factory=dict)

    @property
    def match(self) -> bool:
        return self.predicted_dim == self.direct_dim

    def as_dict(self) -> dict:
        return {
            "degree": self.degree,
            "predicted_dim": self.predicted_dim,
            "direct_dim": self.direct_dim,
            "match": self.match,
            "semisimple_terms": {str(m): v for m, v in sorted(self.semisimple_terms.items())},
            "invariant_terms": {
                str(n): rep.as_dict() for n, rep in sorted(self.invariant_terms.items())
            },
        }


def hochschild_serre_check(
    L: LieAlgebra, levi: LeviData, R: Representation, p: int, *, fast: bool = False
) -> HSReport:
    """Compare ``sum_{m+n=p} H^m(s) * H^n(r, M)^s`` with ``H^p(g, M)``."""
    _require_levi(L, levi)
    S = subalgebra(L, levi.semisimple)
    s_degrees = [m for m in range(p + 1) if m <= S.dim]
    hs = cohomology(S, trivial_rep(S, 1), s_degrees, fast=fast).dims() if S.dim else {0: 1}
    inv = {
        n: invariant_cohomology(L, levi, R, n)
        for n in range(p + 1)
        if n <= len(levi.radical)
    }
    predicted = sum(hs.get(p - n, 0) * rep.dim_H_inv for n, rep in inv.items())
    direct = cohomology(L, R, [p], fast=fast)[p].dim_H
    return HSReport(p, predicted, direct, hs, inv)


def hom_invariants_dim(L: LieAlgebra, levi: LeviData, k: int) -> int:
    """Dimension of the ``s``-invariant ``k``-cochains of an abelian radical
    with values in the radical itself."""
    _require_levi(L, levi)
    rad = levi.radical
    if any(L.structure(i, j) for i in rad for j in rad):
        raise LieValidationError("radical is not abelian")
    V = submodule_rep(L, rad)
    dim_C = CochainIndexing(len(rad), len(rad), k).dim
    if not levi.semisimple:
        return dim_C
    stacked = SparseMatrix.vstack([action_matrix(L, rad, V, k, x) for x in levi.semisimple])
    return kernel_basis(stacked).dim
