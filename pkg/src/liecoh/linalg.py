"""Exact sparse linear algebra over the rationals.

Scalars are :class:`fractions.Fraction` values. Matrices are stored row-wise
as ``{row: {col: value}}`` with no explicit zeros. All eliminations run on
integer rows (each rational row is cleared of denominators and divided by its
content), so intermediate values never need a common denominator.

Three entry points do the heavy lifting:

* :func:`rank` -- forward elimination only, Markowitz pivoting.
* :func:`kernel_basis` -- full reduction, then the null space in reduced
  row-echelon form.
* :func:`intersect` -- intersection of two subspaces, again in normal form.

Results that are bases are always returned in reduced row-echelon form, which
is unique for a given subspace. The pivot order used internally therefore
only affects speed, never the output.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from math import gcd, lcm

__all__ = [
    "FAST_RANK_PRIMES",
    "DimensionError",
    "SparseMatrix",
    "SubspaceBasis",
    "apply",
    "image_basis",
    "intersect",
    "kernel_basis",
    "rank",
    "rank_mod_p",
    "span",
]

# Largest three primes below 2**62.
FAST_RANK_PRIMES = (
    4611686018427387847,
    4611686018427387817,
    4611686018427387787,
)


class DimensionError(ValueError):
    """Raised when operand shapes do not fit together."""


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


class SparseMatrix:
    """Immutable sparse matrix with exact rational entries."""

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, nrows: int, ncols: int, entries: Mapping | None = None):
        if nrows < 0 or ncols < 0:
            raise DimensionError("matrix dimensions must be nonnegative")
        self.nrows = nrows
        self.ncols = ncols
        rows: dict[int, dict[int, Fraction]] = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise DimensionError(f"entry ({r}, {c}) outside {nrows}x{ncols}")
            v = _as_fraction(v)
            if v:
                rows.setdefault(r, {})[c] = v
        self._rows = rows

    @classmethod
    def _from_rows(cls, nrows: int, ncols: int, rows: dict[int, dict[int, Fraction]]):
        # Trusted constructor: rows must already be Fraction-valued, zero-free
        # and in bounds.
        m = cls.__new__(cls)
        m.nrows = nrows
        m.ncols = ncols
        m._rows = {r: row for r, row in rows.items() if row}
        return m

    @classmethod
    def from_rows(cls, nrows: int, ncols: int, rows: Mapping[int, Mapping[int, object]]):
        entries = {(r, c): v for r, row in rows.items() for c, v in row.items()}
        return cls(nrows, ncols, entries)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[object]], ncols: int | None = None):
        nrows = len(data)
        if ncols is None:
            ncols = len(data[0]) if nrows else 0
        entries = {}
        for r, row in enumerate(data):
            if len(row) != ncols:
                raise DimensionError("ragged dense matrix")
            for c, v in enumerate(row):
                if v:
                    entries[(r, c)] = v
        return cls(nrows, ncols, entries)

    @classmethod
    def identity(cls, n: int):
        one = Fraction(1)
        return cls._from_rows(n, n, {i: {i: one} for i in range(n)})

    @classmethod
    def zeros(cls, nrows: int, ncols: int):
        return cls._from_rows(nrows, ncols, {})

    @classmethod
    def vstack(cls, blocks: Sequence[SparseMatrix]):
        if not blocks:
            raise DimensionError("vstack needs at least one block")
        ncols = blocks[0].ncols
        rows = {}
        offset = 0
        for b in blocks:
            if b.ncols != ncols:
                raise DimensionError("vstack blocks differ in column count")
            for r, row in b._rows.items():
                rows[offset + r] = row
            offset += b.nrows
        return cls._from_rows(offset, ncols, rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def entries(self) -> dict[tuple[int, int], Fraction]:
        return {(r, c): v for r, row in self._rows.items() for c, v in row.items()}

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._rows.values())

    def row(self, r: int) -> Mapping[int, Fraction]:
        return dict(self._rows.get(r, {}))

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        r, c = key
        return self._rows.get(r, {}).get(c, Fraction(0))

    def is_zero(self) -> bool:
        return not self._rows

    def transpose(self) -> SparseMatrix:
        cols: dict[int, dict[int, Fraction]] = {}
        for r, row in self._rows.items():
            for c, v in row.items():
                cols.setdefault(c, {})[r] = v
        return SparseMatrix._from_rows(self.ncols, self.nrows, cols)

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for r, row in self._rows.items():
            for c, v in row.items():
                out[r][c] = v
        return out

    def __matmul__(self, other: SparseMatrix) -> SparseMatrix:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        rows = {}
        orows = other._rows
        for r, row in self._rows.items():
            acc: dict[int, Fraction] = {}
            for k, a in row.items():
                brow = orows.get(k)
                if brow is None:
                    continue
                for c, b in brow.items():
                    acc[c] = acc.get(c, 0) + a * b
            acc = {c: v for c, v in acc.items() if v}
            if acc:
                rows[r] = acc
        return SparseMatrix._from_rows(self.nrows, other.ncols, rows)

    def _combine(self, other: SparseMatrix, sign: int) -> SparseMatrix:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        rows = {r: dict(row) for r, row in self._rows.items()}
        for r, row in other._rows.items():
            acc = rows.setdefault(r, {})
            for c, v in row.items():
                x = acc.get(c, 0) + sign * v
                if x:
                    acc[c] = x
                else:
                    acc.pop(c, None)
        return SparseMatrix._from_rows(self.nrows, self.ncols, rows)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        rows = {r: {c: -v for c, v in row.items()} for r, row in self._rows.items()}
        return SparseMatrix._from_rows(self.nrows, self.ncols, rows)

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.nrows, self.ncols, frozenset(self.entries.items())))

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz})"


class SubspaceBasis:
    """Basis of a subspace of Q^n in reduced row-echelon form.

    Construct through :func:`span`, :func:`kernel_basis`, :func:`image_basis`
    or :func:`intersect`; the constructor does not re-verify normal form.
    """

    __slots__ = ("ambient_dim", "_rows", "pivots")

    def __init__(self, ambient_dim: int, rows: Sequence[dict[int, Fraction]]):
        self.ambient_dim = ambient_dim
        self._rows = tuple(rows)
        self.pivots = tuple(min(r) for r in self._rows)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def vectors(self) -> list[tuple[Fraction, ...]]:
        out = []
        for row in self._rows:
            v = [Fraction(0)] * self.ambient_dim
            for c, x in row.items():
                v[c] = x
            out.append(tuple(v))
        return out

    def sparse_vectors(self) -> list[dict[int, Fraction]]:
        return [dict(r) for r in self._rows]

    def as_matrix(self) -> SparseMatrix:
        """Basis vectors as the rows of a matrix."""
        return SparseMatrix._from_rows(
            len(self._rows), self.ambient_dim, {i: dict(r) for i, r in enumerate(self._rows)}
        )

    def contains(self, v: Sequence | Mapping) -> bool:
        """Membership test by reduction against the echelon basis."""
        w = _to_sparse_vector(v, self.ambient_dim)
        for p, row in zip(self.pivots, self._rows):
            x = w.get(p)
            if x:
                for c, y in row.items():
                    z = w.get(c, 0) - x * y
                    if z:
                        w[c] = z
                    else:
                        w.pop(c, None)
        return not w

    def __eq__(self, other):
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._rows == other._rows

    def __hash__(self):
        return hash((self.ambient_dim, tuple(frozenset(r.items()) for r in self._rows)))

    def __repr__(self):
        return f"SubspaceBasis(dim={self.dim}, ambient_dim={self.ambient_dim})"


def _to_sparse_vector(v, n: int) -> dict[int, Fraction]:
    if isinstance(v, Mapping):
        out = {int(c): _as_fraction(x) for c, x in v.items() if x}
        if any(not 0 <= c < n for c in out):
            raise DimensionError("vector index out of range")
        return out
    if len(v) != n:
        raise DimensionError(f"vector has length {len(v)}, expected {n}")
    return {c: _as_fraction(x) for c, x in enumerate(v) if x}


# --------------------------------------------------------------------------
# elimination engine


def _primitive(row: Mapping[int, Fraction]) -> dict[int, int]:
    """Scale a rational row to a primitive integer row."""
    den = lcm(*(v.denominator for v in row.values()))
    ints = {c: v.numerator * (den // v.denominator) for c, v in row.items()}
    g = gcd(*ints.values())
    if g > 1:
        ints = {c: v // g for c, v in ints.items()}
    return ints


def _reduce_mod(row: Mapping[int, Fraction], p: int) -> dict[int, int] | None:
    out = {}
    for c, v in row.items():
        d = v.denominator % p
        if d == 0:
            return None
        x = v.numerator * pow(d, -1, p) % p
        if x:
            out[c] = x
    return out


class _Eliminator:
    """Gaussian elimination on sparse integer rows.

    ``modulus=None`` works over Z with content removal after every update,
    otherwise over GF(p). ``ordered=True`` always pivots on the leftmost
    remaining column (needed for the canonical echelon form); the default is
    Markowitz pivoting restricted to the shortest rows and columns, ties
    broken by (row, col).
    """

    def __init__(self, rows: Mapping[int, dict[int, int]], *, modulus=None, ordered=False):
        self.p = modulus
        self.ordered = ordered
        self.rows: dict[int, dict[int, int]] = {r: row for r, row in rows.items() if row}
        self.col_rows: dict[int, set[int]] = {}
        for r, row in self.rows.items():
            for c in row:
                self.col_rows.setdefault(c, set()).add(r)
        self.pivots: list[tuple[int, dict[int, int]]] = []
        if not ordered:
            self.cbuckets: dict[int, set[int]] = {}
            for c, rs in self.col_rows.items():
                self.cbuckets.setdefault(len(rs), set()).add(c)
            self.rbuckets: dict[int, set[int]] = {}
            for r, row in self.rows.items():
                self.rbuckets.setdefault(len(row), set()).add(r)

    # bucket bookkeeping -----------------------------------------------------

    def _move(self, buckets, key, old: int, new: int):
        if old == new:
            return
        if old:
            b = buckets[old]
            b.discard(key)
            if not b:
                del buckets[old]
        if new:
            buckets.setdefault(new, set()).add(key)

    # pivot choice ------------------------------------------------------------

    def _next_ordered(self):
        cols = self._ordered_cols
        while self._cursor < len(cols):
            c = cols[self._cursor]
            rs = self.col_rows.get(c)
            if rs:
                r = min(rs, key=lambda r: (len(self.rows[r]), r))
                return r, c
            self._cursor += 1
        return None

    def _next_markowitz(self):
        rows, col_rows = self.rows, self.col_rows
        rmin = min(self.rbuckets)
        if rmin == 1:
            r = min(self.rbuckets[1])
            return r, next(iter(rows[r]))
        cmin = min(self.cbuckets)
        if cmin == 1:
            return min((next(iter(col_rows[c])), c) for c in self.cbuckets[1])
        best = None
        for c in self.cbuckets[cmin]:
            for r in col_rows[c]:
                key = ((len(rows[r]) - 1) * (cmin - 1), r, c)
                if best is None or key < best:
                    best = key
        for r in self.rbuckets[rmin]:
            for c in rows[r]:
                key = ((rmin - 1) * (len(col_rows[c]) - 1), r, c)
                if key < best:
                    best = key
        return best[1], best[2]

    # main loop ---------------------------------------------------------------

    def run(self) -> list[tuple[int, dict[int, int]]]:
        if self.ordered:
            # fill only ever brings in columns already present somewhere
            self._ordered_cols = sorted(self.col_rows)
            self._cursor = 0
        while self.rows:
            choice = self._next_ordered() if self.ordered else self._next_markowitz()
            if choice is None:
                break
            self._pivot(*choice)
        return self.pivots

    def _pivot(self, pr: int, pc: int):
        rows, col_rows, p = self.rows, self.col_rows, self.p
        markowitz = not self.ordered
        prow = rows.pop(pr)
        if markowitz:
            self._move(self.rbuckets, pr, len(prow), 0)
        for c in prow:
            rs = col_rows[c]
            rs.discard(pr)
            if markowitz:
                self._move(self.cbuckets, c, len(rs) + 1, len(rs))
        a_p = prow[pc]
        if p is not None and a_p != 1:
            inv = pow(a_p, -1, p)
            prow = {c: v * inv % p for c, v in prow.items()}
            a_p = 1
        targets = sorted(col_rows[pc])
        for r in targets:
            old = rows[r]
            a_i = old[pc]
            if p is None:
                g = gcd(a_p, a_i)
                mp, mi = a_p // g, a_i // g
                if mp < 0:
                    mp, mi = -mp, -mi
                new = old if mp == 1 else {c: v * mp for c, v in old.items()}
                if new is old:
                    new = dict(old)
                for c, v in prow.items():
                    x = new.get(c, 0) - mi * v
                    if x:
                        new[c] = x
                    else:
                        del new[c]
                if new:
                    g = gcd(*new.values())
                    if g > 1:
                        new = {c: v // g for c, v in new.items()}
            else:
                new = dict(old)
                for c, v in prow.items():
                    x = (new.get(c, 0) - a_i * v) % p
                    if x:
                        new[c] = x
                    else:
                        del new[c]
            for c in old:
                if c not in new:
                    rs = col_rows[c]
                    rs.discard(r)
                    if markowitz:
                        self._move(self.cbuckets, c, len(rs) + 1, len(rs))
            for c in new:
                if c not in old:
                    rs = col_rows.setdefault(c, set())
                    rs.add(r)
                    if markowitz:
                        self._move(self.cbuckets, c, len(rs) - 1, len(rs))
            if markowitz:
                self._move(self.rbuckets, r, len(old), len(new))
            if new:
                rows[r] = new
            else:
                del rows[r]
        self.pivots.append((pc, prow))


def _back_substitute(pivots: list[tuple[int, dict[int, int]]], modulus=None):
    """Clear every pivot column from all other pivot rows (in place)."""
    p = modulus
    holders: dict[int, list[int]] = {}
    pivot_cols = {c for c, _ in pivots}
    for idx, (_, row) in enumerate(pivots):
        for c in row:
            if c in pivot_cols:
                holders.setdefault(c, []).append(idx)
    for k in range(len(pivots) - 1, -1, -1):
        ck, rk = pivots[k]
        a_k = rk[ck]
        for j in holders.get(ck, ()):
            if j == k:
                continue
            cj, rj = pivots[j]
            a_j = rj.get(ck)
            if not a_j:
                continue
            if p is None:
                g = gcd(a_k, a_j)
                mk, mj = a_k // g, a_j // g
                if mk < 0:
                    mk, mj = -mk, -mj
                new = {c: v * mk for c, v in rj.items()} if mk != 1 else dict(rj)
                for c, v in rk.items():
                    x = new.get(c, 0) - mj * v
                    if x:
                        new[c] = x
                    else:
                        del new[c]
                g = gcd(*new.values())
                if g > 1:
                    new = {c: v // g for c, v in new.items()}
            else:
                f = a_j * pow(a_k, -1, p) % p
                new = dict(rj)
                for c, v in rk.items():
                    x = (new.get(c, 0) - f * v) % p
                    if x:
                        new[c] = x
                    else:
                        del new[c]
            pivots[j] = (cj, new)
    return pivots


def _integer_rows(m: SparseMatrix) -> dict[int, dict[int, int]]:
    return {r: _primitive(row) for r, row in m._rows.items()}


def _canonical_rows(rows: Iterable[Mapping[int, Fraction]]) -> list[dict[int, Fraction]]:
    """Reduced row-echelon basis of the span of ``rows`` (rows may be dependent)."""
    ints = {i: _primitive(r) for i, r in enumerate(rows) if r}
    pivots = _Eliminator(ints, ordered=True).run()
    _back_substitute(pivots)
    out = []
    for c, row in sorted(pivots, key=lambda t: t[0]):
        lead = row[c]
        out.append({k: Fraction(v, lead) for k, v in sorted(row.items())})
    return out


# --------------------------------------------------------------------------
# public operations


def rank(m: SparseMatrix, *, fast: bool = False) -> int:
    """Exact rank over Q.

    With ``fast=True`` the rank is computed modulo each of
    :data:`FAST_RANK_PRIMES` and accepted if all three agree; any
    disagreement falls back to the exact computation.
    """
    if fast:
        ranks = {rank_mod_p(m, p) for p in FAST_RANK_PRIMES}
        if len(ranks) == 1 and None not in ranks:
            return ranks.pop()
    return len(_Eliminator(_integer_rows(m)).run())


def rank_mod_p(m: SparseMatrix, p: int) -> int | None:
    """Rank over GF(p), or None when some denominator vanishes mod p."""
    rows = {}
    for r, row in m._rows.items():
        red = _reduce_mod(row, p)
        if red is None:
            return None
        rows[r] = red
    return len(_Eliminator(rows, modulus=p).run())


def kernel_basis(m: SparseMatrix) -> SubspaceBasis:
    """Basis of ``{v : m v = 0}`` in reduced row-echelon form."""
    pivots = _Eliminator(_integer_rows(m)).run()
    _back_substitute(pivots)
    pivot_cols = {c for c, _ in pivots}
    vecs: dict[int, dict[int, Fraction]] = {
        f: {f: Fraction(1)} for f in range(m.ncols) if f not in pivot_cols
    }
    for c, row in pivots:
        a = row[c]
        for f, v in row.items():
            if f != c:
                vecs[f][c] = Fraction(-v, a)
    return SubspaceBasis(m.ncols, _canonical_rows(vecs[f] for f in sorted(vecs)))


def image_basis(m: SparseMatrix) -> SubspaceBasis:
    """Basis of the column space of ``m``."""
    t = m.transpose()
    pivots = _Eliminator(_integer_rows(t)).run()
    rows = [{c: Fraction(v) for c, v in row.items()} for _, row in pivots]
    return SubspaceBasis(m.nrows, _canonical_rows(rows))


def span(vectors: Iterable, ambient_dim: int) -> SubspaceBasis:
    """Reduced echelon basis of the span of arbitrary (dense or sparse) vectors."""
    rows = [_to_sparse_vector(v, ambient_dim) for v in vectors]
    return SubspaceBasis(ambient_dim, _canonical_rows(r for r in rows if r))


def intersect(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    """Basis of ``a ∩ b``.

    Solves ``sum x_i a_i = sum y_j b_j``; because each basis is independent the
    map ``(x, y) -> sum x_i a_i`` is injective on the solution space.
    """
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError(
            f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}"
        )
    n = a.ambient_dim
    if not a.dim or not b.dim:
        return SubspaceBasis(n, [])
    ka = a.dim
    cols: dict[int, dict[int, Fraction]] = {}
    for i, row in enumerate(a._rows):
        for c, v in row.items():
            cols.setdefault(c, {})[i] = v
    for j, row in enumerate(b._rows):
        for c, v in row.items():
            cols.setdefault(c, {})[ka + j] = -v
    system = SparseMatrix._from_rows(n, ka + b.dim, cols)
    sol = kernel_basis(system)
    out = []
    for x in sol._rows:
        acc: dict[int, Fraction] = {}
        for i, coef in x.items():
            if i >= ka:
                continue
            for c, v in a._rows[i].items():
                acc[c] = acc.get(c, 0) + coef * v
        out.append({c: v for c, v in acc.items() if v})
    return SubspaceBasis(n, _canonical_rows(out))


def apply(m: SparseMatrix, v: Sequence) -> list[Fraction]:
    """Exact product ``m @ v`` for a dense vector ``v``."""
    if len(v) != m.ncols:
        raise DimensionError(f"vector has length {len(v)}, matrix has {m.ncols} columns")
    v = [_as_fraction(x) for x in v]
    out = [Fraction(0)] * m.nrows
    for r, row in m._rows.items():
        out[r] = sum((x * v[c] for c, x in row.items()), Fraction(0))
    return out
