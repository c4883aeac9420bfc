"""Chevalley-Eilenberg cochains and their differential.

``C^n(g, M)`` has basis ``(S, a)``: ``S`` an ``n``-subset of the basis of
``g`` and ``a`` a basis index of ``M``. The cochain ``(S, a)`` sends
``(e_s0, ..., e_s(n-1))`` (``S`` sorted) to ``m_a`` and every other sorted
tuple to zero. Flat index: ``combo_rank(S) * module_dim + a`` with
colexicographic subset ranks.

The differential is

    (d phi)(x_0..x_n) = sum_i (-1)^i x_i . phi(..^x_i..)
                      + sum_{i<j} (-1)^(i+j) phi([x_i, x_j], ..^x_i..^x_j..)

with both sums over all argument positions ``0..n``.
"""

from __future__ import annotations

from bisect import bisect_left
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .linalg import SparseMatrix, SubspaceBasis, image_basis, kernel_basis, rank
from .lie import LieAlgebra, LieValidationError, Representation, adjoint_rep

__all__ = [
    "CochainIndexing",
    "CohomologyReport",
    "DegreeReport",
    "cohomology",
    "combo_rank",
    "combo_unrank",
    "d_squared_is_zero",
    "derivation_space",
    "differential_matrix",
]


def combo_rank(S: Sequence[int], n_total: int | None = None) -> int:
    """Colexicographic rank of a strictly increasing subset (0-based)."""
    prev = -1
    r = 0
    for pos, s in enumerate(S):
        if s <= prev or s < 0 or (n_total is not None and s >= n_total):
            raise ValueError(f"malformed subset {tuple(S)}")
        r += comb(s, pos + 1)
        prev = s
    return r


def combo_unrank(r: int, k: int, n_total: int) -> tuple[int, ...]:
    """Inverse of :func:`combo_rank` for ``k``-subsets of ``range(n_total)``."""
    if not 0 <= r < comb(n_total, k):
        raise ValueError(f"rank {r} out of range for {k}-subsets of {n_total}")
    out = []
    x = n_total - 1
    for pos in range(k, 0, -1):
        while comb(x, pos) > r:
            x -= 1
        out.append(x)
        r -= comb(x, pos)
        x -= 1
    return tuple(reversed(out))


def _subsets(n_total: int, k: int) -> list[tuple[int, ...]]:
    # colex order, so list position equals combo_rank
    if k == 0:
        return [()]
    return [combo_unrank(r, k, n_total) for r in range(comb(n_total, k))]


@dataclass(frozen=True)
class CochainIndexing:
    algebra_dim: int
    module_dim: int
    degree: int

    @property
    def dim(self) -> int:
        return comb(self.algebra_dim, self.degree) * self.module_dim

    def index(self, S: Sequence[int], a: int) -> int:
        if len(S) != self.degree or not 0 <= a < self.module_dim:
            raise ValueError("cochain label does not match this indexing")
        return combo_rank(S, self.algebra_dim) * self.module_dim + a

    def label(self, idx: int) -> tuple[tuple[int, ...], int]:
        r, a = divmod(idx, self.module_dim)
        return combo_unrank(r, self.degree, self.algebra_dim), a


def _insert(rest: tuple[int, ...], x: int) -> tuple[tuple[int, ...], int] | None:
    """Insert ``x`` into a sorted tuple; returns (tuple, position) or None if present."""
    p = bisect_left(rest, x)
    if p < len(rest) and rest[p] == x:
        return None
    return rest[:p] + (x,) + rest[p:], p


def _check(L: LieAlgebra, R: Representation) -> None:
    if R.algebra is not L and R.algebra != L:
        raise LieValidationError("representation belongs to a different algebra")
    if len(R.actions) != L.dim:
        raise LieValidationError("representation has the wrong number of action matrices")


def differential_matrix(L: LieAlgebra, R: Representation, n: int) -> SparseMatrix:
    """Matrix of ``d^n : C^n(L, R) -> C^(n+1)(L, R)``, assembled column by column."""
    _check(L, R)
    dim, m = L.dim, R.module_dim
    if n < 0:
        raise ValueError("degree must be nonnegative")
    src = CochainIndexing(dim, m, n)
    dst = CochainIndexing(dim, m, n + 1)
    if n + 1 > dim:
        return SparseMatrix.zeros(0, src.dim)
    # pairs (p, q), p < q, whose bracket has a component along e_k
    through: dict[int, list[tuple[int, int, Fraction]]] = {}
    for (p, q), vec in L.brackets.items():
        for k, c in vec.items():
            through.setdefault(k, []).append((p, q, c))
    cols = R._columns()
    rows: dict[int, dict[int, Fraction]] = {}

    def add(r: int, c: int, v: Fraction):
        row = rows.setdefault(r, {})
        x = row.get(c, 0) + v
        if x:
            row[c] = x
        else:
            del row[c]

    for srank, S in enumerate(_subsets(dim, n)):
        base = srank * m
        # action term: x_t . phi(S) where T = S + {t}
        for t in range(dim):
            ins = _insert(S, t)
            if ins is None:
                continue
            T, pos = ins
            sign = -1 if pos % 2 else 1
            trow = combo_rank(T) * m
            act = cols[t]
            for a in range(m):
                for b, v in act.get(a, {}).items():
                    add(trow + b, base + a, sign * v)
        # bracket term: phi([x_p, x_q], rest) with {k} + rest = S
        for kpos, k in enumerate(S):
            rest = S[:kpos] + S[kpos + 1:]
            ksign = -1 if kpos % 2 else 1
            for p, q, c in through.get(k, ()):
                ins = _insert(rest, p)
                if ins is None:
                    continue
                ins2 = _insert(ins[0], q)
                if ins2 is None:
                    continue
                T, jpos = ins2
                ipos = T.index(p)
                sign = ksign * (-1 if (ipos + jpos) % 2 else 1)
                trow = combo_rank(T) * m
                v = sign * c
                for a in range(m):
                    add(trow + a, base + a, v)
    return SparseMatrix._from_rows(dst.dim, src.dim, rows)


def d_squared_is_zero(L: LieAlgebra, R: Representation, n: int) -> bool:
    """Whether ``d^(n+1) o d^n`` vanishes exactly."""
    return (differential_matrix(L, R, n + 1) @ differential_matrix(L, R, n)).is_zero()


@dataclass(frozen=True)
class DegreeReport:
    dim_C: int
    dim_Z: int
    dim_B: int
    cocycle_basis: SubspaceBasis | None = field(default=None, compare=False)
    coboundary_basis: SubspaceBasis | None = field(default=None, compare=False)

    @property
    def dim_H(self) -> int:
        return self.dim_Z - self.dim_B

    def as_dict(self) -> dict[str, int]:
        return {"dim_C": self.dim_C, "dim_Z": self.dim_Z, "dim_B": self.dim_B, "dim_H": self.dim_H}


@dataclass(frozen=True)
class CohomologyReport:
    degrees: dict[int, DegreeReport]

    def __getitem__(self, n: int) -> DegreeReport:
        return self.degrees[n]

    def dims(self) -> dict[int, int]:
        return {n: r.dim_H for n, r in self.degrees.items()}


def cohomology(
    L: LieAlgebra,
    R: Representation | None = None,
    degrees: Iterable[int] = (2,),
    *,
    bases: bool = False,
    fast: bool = False,
) -> CohomologyReport:
    """Dimensions of ``C^n, Z^n, B^n, H^n`` for each requested degree.

    ``R`` defaults to the adjoint module. Each needed differential is built
    and reduced once even when adjacent degrees share it.
    """
    if R is None:
        R = adjoint_rep(L)
    _check(L, R)
    degrees = sorted(set(degrees))
    if any(n < 0 or n > L.dim for n in degrees):
        raise ValueError(f"degrees must lie in 0..{L.dim}")
    ranks: dict[int, int] = {}
    mats: dict[int, SparseMatrix] = {}

    def mat(n):
        if n not in mats:
            mats[n] = differential_matrix(L, R, n)
        return mats[n]

    def rk(n):
        if n < 0:
            return 0
        if n not in ranks:
            ranks[n] = rank(mat(n), fast=fast)
        return ranks[n]

    out = {}
    for n in degrees:
        dim_C = CochainIndexing(L.dim, R.module_dim, n).dim
        zb = bb = None
        if bases:
            zb = kernel_basis(mat(n))
            bb = image_basis(mat(n - 1)) if n > 0 else SubspaceBasis(dim_C, [])
            ranks.setdefault(n, dim_C - zb.dim)
            if n > 0:
                ranks.setdefault(n - 1, bb.dim)
        out[n] = DegreeReport(dim_C, dim_C - rk(n), rk(n - 1), zb, bb)
    return CohomologyReport(out)


def derivation_space(L: LieAlgebra) -> SubspaceBasis:
    """``Der(L) = Z^1(L, ad)``; vector ``(S=(j,), a)`` is the coefficient of
    ``e_a`` in ``D(e_j)``."""
    return kernel_basis(differential_matrix(L, adjoint_rep(L), 1))
