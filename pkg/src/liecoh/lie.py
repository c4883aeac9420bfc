"""Lie algebras from structure constants, and their representations.

A :class:`LieAlgebra` stores ``[e_i, e_j]`` only for ``i < j``; the opposite
order is the negation and ``[e_i, e_i] = 0``. Vectors in the algebra are
either dense sequences of length ``dim`` or sparse ``{index: coefficient}``
mappings.
"""

from __future__ import annotations

import json
import warnings
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .linalg import DimensionError, SparseMatrix

__all__ = [
    "JacobiError",
    "LeviData",
    "LeviReport",
    "LieAlgebra",
    "LieValidationError",
    "Representation",
    "adjoint_rep",
    "bracket",
    "check_levi",
    "is_ideal",
    "is_subalgebra",
    "jacobi_violations",
    "lie_algebra_from_json",
    "lie_algebra_to_json",
    "make_lie_algebra",
    "make_representation",
    "rep_violations",
    "restrict_rep",
    "subalgebra",
    "submodule_rep",
    "trivial_rep",
]

Vector = dict[int, Fraction]


class LieValidationError(ValueError):
    """Malformed structure constants or representation data."""


class JacobiError(LieValidationError):
    """Structure constants violate the Jacobi identity.

    ``violations`` holds ``((i, j, k), residual)`` pairs, residual being the
    dense vector ``[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]``.
    """

    def __init__(self, violations):
        self.violations = violations
        (i, j, k), _ = violations[0]
        super().__init__(
            f"Jacobi identity fails on {len(violations)} triple(s), first at ({i}, {j}, {k})"
        )


def _add_into(acc: Vector, vec: Mapping[int, Fraction], scale=1) -> None:
    for k, v in vec.items():
        x = acc.get(k, 0) + scale * v
        if x:
            acc[k] = x
        else:
            acc.pop(k, None)


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    dim: int
    labels: tuple[str, ...]
    brackets: Mapping[tuple[int, int], Mapping[int, Fraction]]
    _table: dict = field(init=False, repr=False)

    def __post_init__(self):
        table = {}
        for (i, j), vec in self.brackets.items():
            table[(i, j)] = vec
            table[(j, i)] = {k: -v for k, v in vec.items()}
        object.__setattr__(self, "_table", table)

    def structure(self, i: int, j: int) -> Mapping[int, Fraction]:
        """``[e_i, e_j]`` as a sparse vector (shared; do not mutate)."""
        return self._table.get((i, j), {})

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def basis_vector(self, i: int) -> Vector:
        return {i: Fraction(1)}

    def is_abelian(self) -> bool:
        return not self.brackets

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.labels == other.labels
            and dict(self.brackets) == dict(other.brackets)
        )

    def __hash__(self):
        return hash((self.dim, self.labels, len(self.brackets)))

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, nonzero_brackets={len(self.brackets)})"


def _coerce_vector(vec, dim: int) -> Vector:
    if isinstance(vec, Mapping):
        out = {}
        for k, v in vec.items():
            k = int(k)
            if not 0 <= k < dim:
                raise LieValidationError(f"basis index {k} out of range for dim {dim}")
            v = Fraction(v)
            if v:
                out[k] = v
        return out
    if len(vec) != dim:
        raise LieValidationError(f"coefficient vector has length {len(vec)}, expected {dim}")
    return {k: Fraction(v) for k, v in enumerate(vec) if v}


def make_lie_algebra(
    dim: int,
    labels: Sequence[str] | None = None,
    brackets: Mapping[tuple[int, int], object] | None = None,
    *,
    validate: bool = True,
) -> LieAlgebra:
    """Build a Lie algebra from ``{(i, j): [e_i, e_j]}`` with ``i < j``.

    Raises :class:`JacobiError` if ``validate`` is set and the Jacobi identity
    fails; pass ``validate=False`` to defer the check.
    """
    if dim < 0:
        raise LieValidationError("dimension must be nonnegative")
    if labels is None:
        labels = [f"e{i}" for i in range(dim)]
    labels = tuple(str(x) for x in labels)
    if len(labels) != dim:
        raise LieValidationError(f"{len(labels)} labels for dimension {dim}")
    table = {}
    for key, vec in (brackets or {}).items():
        i, j = (int(x) for x in key)
        if not (0 <= i < dim and 0 <= j < dim):
            raise LieValidationError(f"bracket key ({i}, {j}) out of range for dim {dim}")
        if i >= j:
            raise LieValidationError(f"bracket key ({i}, {j}) must satisfy i < j")
        v = _coerce_vector(vec, dim)
        if v:
            table[(i, j)] = dict(sorted(v.items()))
    L = LieAlgebra(dim, labels, dict(sorted(table.items())))
    if validate:
        bad = jacobi_violations(L)
        if bad:
            raise JacobiError(bad)
    return L


def _bracket_sparse(L: LieAlgebra, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> Vector:
    acc: Vector = {}
    for i, a in x.items():
        for j, b in y.items():
            if i != j:
                s = L.structure(i, j)
                if s:
                    _add_into(acc, s, a * b)
    return acc


def bracket(L: LieAlgebra, x, y) -> list[Fraction] | Vector:
    """Bracket of two vectors; dense in, dense out, sparse in, sparse out."""
    sparse = isinstance(x, Mapping) and isinstance(y, Mapping)
    try:
        xs = _coerce_vector(x, L.dim)
        ys = _coerce_vector(y, L.dim)
    except LieValidationError as exc:
        raise DimensionError(str(exc)) from None
    out = _bracket_sparse(L, xs, ys)
    if sparse:
        return out
    dense = [Fraction(0)] * L.dim
    for k, v in out.items():
        dense[k] = v
    return dense


def jacobi_violations(L: LieAlgebra) -> list[tuple[tuple[int, int, int], tuple[Fraction, ...]]]:
    """All basis triples ``i < j < k`` on which the Jacobi identity fails."""
    bad = []
    e = L.basis_vector
    for i, j, k in combinations(range(L.dim), 3):
        acc: Vector = {}
        _add_into(acc, _bracket_sparse(L, e(i), L.structure(j, k)))
        _add_into(acc, _bracket_sparse(L, e(j), L.structure(k, i)))
        _add_into(acc, _bracket_sparse(L, e(k), L.structure(i, j)))
        if acc:
            res = [Fraction(0)] * L.dim
            for c, v in acc.items():
                res[c] = v
            bad.append(((i, j, k), tuple(res)))
    return bad


# --------------------------------------------------------------------------
# representations


@dataclass(frozen=True, eq=False)
class Representation:
    """``actions[i]`` is the matrix of ``e_i`` on the module."""

    algebra: LieAlgebra
    module_dim: int
    actions: tuple[SparseMatrix, ...]

    def column(self, i: int, a: int) -> Mapping[int, Fraction]:
        """Image of module basis vector ``a`` under ``e_i``, as a sparse vector."""
        cols = self._columns()
        return cols[i].get(a, {})

    def _columns(self):
        cached = self.__dict__.get("_cols")
        if cached is None:
            cached = []
            for m in self.actions:
                by_col: dict[int, dict[int, Fraction]] = {}
                for (r, c), v in m.entries.items():
                    by_col.setdefault(c, {})[r] = v
                cached.append(by_col)
            object.__setattr__(self, "_cols", cached)
        return cached


def make_representation(L: LieAlgebra, actions: Sequence[SparseMatrix]) -> Representation:
    actions = tuple(actions)
    if len(actions) != L.dim:
        raise LieValidationError(f"{len(actions)} action matrices for dim {L.dim}")
    n = actions[0].nrows if actions else 0
    for m in actions:
        if m.shape != (n, n):
            raise LieValidationError("action matrices must be square and of equal size")
    return Representation(L, n, actions)


def rep_violations(R: Representation) -> list[tuple[int, int]]:
    """Pairs ``i < j`` with ``rho([e_i, e_j]) != [rho(e_i), rho(e_j)]``."""
    L = R.algebra
    bad = []
    zero = SparseMatrix.zeros(R.module_dim, R.module_dim)
    for i, j in combinations(range(L.dim), 2):
        lhs = zero
        for k, c in L.structure(i, j).items():
            lhs = lhs + _scale(R.actions[k], c)
        rhs = R.actions[i] @ R.actions[j] - R.actions[j] @ R.actions[i]
        if lhs != rhs:
            bad.append((i, j))
    return bad


def _scale(m: SparseMatrix, c: Fraction) -> SparseMatrix:
    return SparseMatrix._from_rows(
        m.nrows, m.ncols, {r: {k: v * c for k, v in row.items()} for r, row in m._rows.items()}
    )


def adjoint_rep(L: LieAlgebra) -> Representation:
    """Column ``j`` of ``actions[i]`` is ``[e_i, e_j]``."""
    actions = []
    for i in range(L.dim):
        rows: dict[int, dict[int, Fraction]] = {}
        for j in range(L.dim):
            for k, v in L.structure(i, j).items():
                rows.setdefault(k, {})[j] = v
        actions.append(SparseMatrix._from_rows(L.dim, L.dim, rows))
    return Representation(L, L.dim, tuple(actions))


def trivial_rep(L: LieAlgebra, module_dim: int = 1) -> Representation:
    zero = SparseMatrix.zeros(module_dim, module_dim)
    return Representation(L, module_dim, tuple(zero for _ in range(L.dim)))


def is_subalgebra(L: LieAlgebra, indices: Iterable[int]) -> bool:
    idx = set(indices)
    return all(
        set(L.structure(i, j)) <= idx for i in idx for j in idx if i < j
    )


def is_ideal(L: LieAlgebra, indices: Iterable[int]) -> bool:
    """True when ``[g, r]`` lies in the span of the basis vectors ``indices``."""
    idx = set(indices)
    return all(set(L.structure(i, j)) <= idx for i in range(L.dim) for j in idx)


def subalgebra(L: LieAlgebra, indices: Sequence[int]) -> LieAlgebra:
    """The span of some basis vectors, re-indexed ``0..len(indices)-1`` in the given order."""
    indices = list(indices)
    if len(set(indices)) != len(indices):
        raise LieValidationError("repeated index in subalgebra")
    if not is_subalgebra(L, indices):
        raise LieValidationError("index set is not closed under the bracket")
    pos = {g: n for n, g in enumerate(indices)}
    brackets = {}
    for a, b in combinations(range(len(indices)), 2):
        i, j = indices[a], indices[b]
        vec = L.structure(i, j)
        if vec:
            brackets[(a, b)] = {pos[k]: v for k, v in vec.items()}
    return make_lie_algebra(
        len(indices), [L.labels[i] for i in indices], brackets, validate=False
    )


def restrict_rep(R: Representation, sub: Sequence[int]) -> Representation:
    """Representation of the subalgebra spanned by ``sub`` on the same module."""
    S = subalgebra(R.algebra, sub)
    return Representation(S, R.module_dim, tuple(R.actions[i] for i in sub))


def submodule_rep(L: LieAlgebra, ideal: Sequence[int]) -> Representation:
    """The ideal spanned by ``ideal`` as an ``L``-module under the adjoint action."""
    ideal = list(ideal)
    if not is_ideal(L, ideal):
        raise LieValidationError("index set is not an ideal")
    pos = {g: n for n, g in enumerate(ideal)}
    actions = []
    for i in range(L.dim):
        rows: dict[int, dict[int, Fraction]] = {}
        for n, j in enumerate(ideal):
            for k, v in L.structure(i, j).items():
                rows.setdefault(pos[k], {})[n] = v
        actions.append(SparseMatrix._from_rows(len(ideal), len(ideal), rows))
    return Representation(L, len(ideal), tuple(actions))


# --------------------------------------------------------------------------
# Levi data


@dataclass(frozen=True)
class LeviData:
    semisimple: tuple[int, ...]
    radical: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "semisimple", tuple(self.semisimple))
        object.__setattr__(self, "radical", tuple(self.radical))


@dataclass(frozen=True)
class LeviReport:
    partition: bool
    semisimple_closed: bool
    radical_ideal: bool
    problems: tuple[str, ...] = ()

    @property
    def valid(self) -> bool:
        return self.partition and self.semisimple_closed and self.radical_ideal

    def __bool__(self):
        return self.valid


def check_levi(L: LieAlgebra, ld: LeviData, *, trusted: bool = False) -> LeviReport:
    """Check that ``ld`` splits the basis into a subalgebra and an ideal.

    Semisimplicity of the first part is not checked; a warning says so unless
    ``trusted`` (set by catalog constructors).
    """
    problems = []
    s, r = list(ld.semisimple), list(ld.radical)
    partition = sorted(s + r) == list(range(L.dim))
    if not partition:
        problems.append("index sets do not partition the basis")
    in_range = all(0 <= i < L.dim for i in s + r)
    closed = in_range and is_subalgebra(L, s)
    if not closed:
        problems.append("semisimple part is not closed under the bracket")
    ideal = in_range and is_ideal(L, r)
    if not ideal:
        problems.append("radical is not an ideal")
    if not trusted:
        warnings.warn(
            "semisimplicity of the declared Levi factor is not verified", stacklevel=2
        )
    return LeviReport(partition, closed, ideal, tuple(problems))


# --------------------------------------------------------------------------
# JSON structure-constant files


def lie_algebra_to_json(L: LieAlgebra) -> dict:
    return {
        "dim": L.dim,
        "labels": list(L.labels),
        "brackets": [
            {
                "i": i,
                "j": j,
                "terms": [
                    {"k": k, "num": str(v.numerator), "den": str(v.denominator)}
                    for k, v in sorted(vec.items())
                ],
            }
            for (i, j), vec in sorted(L.brackets.items())
        ],
    }


def lie_algebra_from_json(data: Mapping | str, *, validate: bool = True) -> LieAlgebra:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        dim = int(data["dim"])
        labels = data.get("labels")
        brackets = {}
        for entry in data.get("brackets", []):
            key = (int(entry["i"]), int(entry["j"]))
            if key in brackets:
                raise LieValidationError(f"duplicate bracket entry {key}")
            vec = {}
            for t in entry["terms"]:
                num, den = int(t["num"]), int(t["den"])
                if den <= 0:
                    raise LieValidationError("denominators must be positive")
                vec[int(t["k"])] = Fraction(num, den)
            brackets[key] = vec
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, LieValidationError):
            raise
        raise LieValidationError(f"malformed algebra file: {exc}") from None
    return make_lie_algebra(dim, labels, brackets, validate=validate)
