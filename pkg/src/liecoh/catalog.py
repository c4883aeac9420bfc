"""Built-in algebras: conformal Galilei algebras and their relatives.

Spin is passed as ``two_ell = 2*ell`` so that half-integer spins stay integral.
Basis order for ``cga``: ``H, D, C``, then rotations ``M_i_j`` (``i < j``,
lexicographic), then translations ``P_n_i`` ordered by ``(n, i)``, then the
central element (``M`` for the mass extension, ``Theta`` for the exotic one).
Spatial indices in labels are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial

from .lie import LeviData, LieAlgebra, make_lie_algebra

__all__ = [
    "CatalogError",
    "CatalogSpec",
    "build",
    "build_abelian",
    "build_cga",
    "build_d1_cga",
    "build_exotic_extension",
    "build_heisenberg",
    "build_mass_extension",
    "build_schrodinger",
    "build_sl2",
    "build_so",
    "cga_dim",
    "exotic_coefficient",
    "mass_coefficient",
]

FAMILIES = ("sl2", "so", "cga", "cga-mass", "cga-exotic", "heisenberg", "abelian", "schrodinger")


class CatalogError(ValueError):
    """Invalid catalog parameters."""


@dataclass(frozen=True)
class CatalogSpec:
    family: str
    d: int = 1
    two_ell: int = 0
    n: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise CatalogError(f"unknown family {self.family!r}")
        if self.family == "cga-mass" and self.two_ell % 2 != 1:
            raise CatalogError("the mass extension needs half-integer spin (odd two_ell)")
        if self.family == "cga-exotic" and (self.two_ell % 2 != 0 or self.d != 2):
            raise CatalogError("the exotic extension needs d = 2 and integer spin")

    @property
    def label(self) -> str:
        f = self.family
        if f in ("sl2",):
            return "sl2"
        if f == "so":
            return f"so({self.d})"
        if f in ("abelian", "heisenberg"):
            return f"{f}({self.n})"
        if f == "schrodinger":
            return f"schrodinger(d={self.d})"
        return f"{f}(d={self.d},two_ell={self.two_ell})"


def cga_dim(d: int, two_ell: int) -> int:
    return d * (d - 1) // 2 + (two_ell + 1) * d + 3


def mass_coefficient(m: int, two_ell: int) -> Fraction:
    """``b_m = (-1)^(m + ell + 1/2) (2 ell - m)! m!`` for half-integer ``ell``."""
    if two_ell % 2 != 1 or two_ell < 0:
        raise CatalogError("mass coefficients need odd two_ell")
    if not 0 <= m <= two_ell:
        raise CatalogError(f"m = {m} outside 0..{two_ell}")
    sign = -1 if (m + (two_ell + 1) // 2) % 2 else 1
    return Fraction(sign * factorial(two_ell - m) * factorial(m))


def exotic_coefficient(m: int, two_ell: int) -> Fraction:
    """``q_m = (-1)^m (2 ell - m)! m!`` for integer ``ell``."""
    if two_ell % 2 != 0 or two_ell < 0:
        raise CatalogError("exotic coefficients need even two_ell")
    if not 0 <= m <= two_ell:
        raise CatalogError(f"m = {m} outside 0..{two_ell}")
    return Fraction((-1) ** m * factorial(two_ell - m) * factorial(m))


class _Builder:
    """Collects brackets given in any order and stores them with ``i < j``."""

    def __init__(self, labels):
        self.labels = list(labels)
        self.pos = {name: i for i, name in enumerate(self.labels)}
        self.table: dict[tuple[int, int], dict[int, Fraction]] = {}

    def set(self, x: str, y: str, terms: dict[str, int | Fraction]):
        i, j = self.pos[x], self.pos[y]
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        vec = self.table.setdefault((i, j), {})
        for name, c in terms.items():
            if c:
                k = self.pos[name]
                vec[k] = vec.get(k, 0) + sign * Fraction(c)
                if not vec[k]:
                    del vec[k]

    def algebra(self) -> LieAlgebra:
        return make_lie_algebra(len(self.labels), self.labels, self.table)


def _rot(i: int, j: int) -> str:
    return f"M_{i}_{j}"


def _trans(n: int, i: int) -> str:
    return f"P_{n}_{i}"


def _so_terms(d: int, i: int, j: int, k: int, r: int) -> dict[str, int]:
    """``[M_ij, M_kr] = -d_ik M_jr - d_jr M_ik + d_ir M_jk + d_jk M_ir``, with
    ``M_ba = -M_ab`` and ``M_aa = 0``."""
    out: dict[str, int] = {}

    def add(a, b, c):
        if a == b or not c:
            return
        if a > b:
            a, b, c = b, a, -c
        name = _rot(a, b)
        out[name] = out.get(name, 0) + c

    add(j, r, -(i == k))
    add(i, k, -(j == r))
    add(j, k, (i == r))
    add(i, r, (j == k))
    return out


def _cga_labels(d: int, two_ell: int) -> list[str]:
    labels = ["H", "D", "C"]
    labels += [_rot(i, j) for i, j in combinations(range(1, d + 1), 2)]
    labels += [_trans(n, i) for n in range(two_ell + 1) for i in range(1, d + 1)]
    return labels


def _cga_brackets(b: _Builder, d: int, two_ell: int) -> None:
    b.set("D", "H", {"H": 2})
    b.set("C", "H", {"D": 1})
    b.set("D", "C", {"C": -2})
    rots = list(combinations(range(1, d + 1), 2))
    for (i, j), (k, r) in combinations(rots, 2):
        b.set(_rot(i, j), _rot(k, r), _so_terms(d, i, j, k, r))
    for i, j in rots:
        for n in range(two_ell + 1):
            for k in range(1, d + 1):
                terms = {}
                if i == k:
                    terms[_trans(n, j)] = -1
                if j == k:
                    terms[_trans(n, i)] = 1
                if terms:
                    b.set(_rot(i, j), _trans(n, k), terms)
    for n in range(two_ell + 1):
        for i in range(1, d + 1):
            p = _trans(n, i)
            if n > 0:
                b.set("H", p, {_trans(n - 1, i): -n})
            b.set("D", p, {p: two_ell - 2 * n})
            if n < two_ell:
                b.set("C", p, {_trans(n + 1, i): two_ell - n})


def _levi(labels: list[str], semisimple: list[str]) -> LeviData:
    s = [i for i, name in enumerate(labels) if name in set(semisimple)]
    r = [i for i in range(len(labels)) if i not in set(s)]
    return LeviData(tuple(s), tuple(r))


def _cga_semisimple(d: int) -> list[str]:
    s = ["H", "D", "C"]
    if d >= 3:
        s += [_rot(i, j) for i, j in combinations(range(1, d + 1), 2)]
    return s


def build_cga(d: int, two_ell: int) -> tuple[LieAlgebra, LeviData]:
    """``cga_ell(d)``. For ``d <= 2`` the Levi factor is just ``sl2``; the
    rotation ``M_1_2`` of ``d = 2`` belongs to the radical."""
    if d < 1:
        raise CatalogError("spatial dimension must be >= 1")
    if two_ell < 0:
        raise CatalogError("two_ell must be nonnegative")
    labels = _cga_labels(d, two_ell)
    b = _Builder(labels)
    _cga_brackets(b, d, two_ell)
    return b.algebra(), _levi(labels, _cga_semisimple(d))


def build_d1_cga(two_ell: int) -> tuple[LieAlgebra, LeviData]:
    """``sl2`` acting on its irreducible module of dimension ``two_ell + 1``."""
    return build_cga(1, two_ell)


def build_mass_extension(d: int, two_ell: int) -> tuple[LieAlgebra, LeviData]:
    """Central extension by ``M`` with
    ``[P_m_i, P_n_j] = delta_ij delta_(m+n, 2 ell) b_m M``."""
    if d < 1:
        raise CatalogError("spatial dimension must be >= 1")
    if two_ell % 2 != 1 or two_ell < 0:
        raise CatalogError("the mass extension exists only for half-integer spin (odd two_ell)")
    labels = _cga_labels(d, two_ell) + ["M"]
    b = _Builder(labels)
    _cga_brackets(b, d, two_ell)
    for m in range(two_ell + 1):
        n = two_ell - m
        if m < n:
            for i in range(1, d + 1):
                b.set(_trans(m, i), _trans(n, i), {"M": mass_coefficient(m, two_ell)})
    return b.algebra(), _levi(labels, _cga_semisimple(d))


def build_schrodinger(d: int) -> tuple[LieAlgebra, LeviData]:
    """Schrödinger algebra in ``d`` space dimensions (mass extension at spin 1/2)."""
    return build_mass_extension(d, 1)


def build_exotic_extension(two_ell: int) -> tuple[LieAlgebra, LeviData]:
    """``d = 2`` central extension by ``Theta`` with
    ``[P_m_i, P_n_j] = eps_ij delta_(m+n, 2 ell) q_m Theta``."""
    if two_ell % 2 != 0 or two_ell < 0:
        raise CatalogError("the exotic extension exists only for integer spin (even two_ell)")
    labels = _cga_labels(2, two_ell) + ["Theta"]
    b = _Builder(labels)
    _cga_brackets(b, 2, two_ell)
    for m in range(two_ell + 1):
        b.set(_trans(m, 1), _trans(two_ell - m, 2), {"Theta": exotic_coefficient(m, two_ell)})
    return b.algebra(), _levi(labels, _cga_semisimple(2))


def build_sl2() -> LieAlgebra:
    b = _Builder(["H", "D", "C"])
    b.set("D", "H", {"H": 2})
    b.set("C", "H", {"D": 1})
    b.set("D", "C", {"C": -2})
    return b.algebra()


def build_so(d: int) -> LieAlgebra:
    if d < 2:
        raise CatalogError("so(d) needs d >= 2")
    rots = list(combinations(range(1, d + 1), 2))
    b = _Builder([_rot(i, j) for i, j in rots])
    for (i, j), (k, r) in combinations(rots, 2):
        b.set(_rot(i, j), _rot(k, r), _so_terms(d, i, j, k, r))
    return b.algebra()


def build_abelian(n: int) -> LieAlgebra:
    if n < 0:
        raise CatalogError("dimension must be nonnegative")
    return make_lie_algebra(n, [f"x{i}" for i in range(1, n + 1)], {})


def build_heisenberg(k: int) -> LieAlgebra:
    """Heisenberg algebra of odd dimension ``k``: ``[p_i, q_i] = z``."""
    if k < 3 or k % 2 == 0:
        raise CatalogError("Heisenberg algebras have odd dimension >= 3")
    n = (k - 1) // 2
    labels = [f"p{i}" for i in range(1, n + 1)] + [f"q{i}" for i in range(1, n + 1)] + ["z"]
    b = _Builder(labels)
    for i in range(1, n + 1):
        b.set(f"p{i}", f"q{i}", {"z": 1})
    return b.algebra()


def build(spec: CatalogSpec) -> tuple[LieAlgebra, LeviData]:
    """Construct any catalog algebra together with its Levi data."""
    f = spec.family
    if f == "cga":
        return build_cga(spec.d, spec.two_ell)
    if f == "cga-mass":
        return build_mass_extension(spec.d, spec.two_ell)
    if f == "cga-exotic":
        return build_exotic_extension(spec.two_ell)
    if f == "schrodinger":
        return build_schrodinger(spec.d)
    if f == "sl2":
        L = build_sl2()
        return L, LeviData(tuple(range(3)), ())
    if f == "so":
        L = build_so(spec.d)
        if spec.d == 2:
            # so(2) is one-dimensional, hence abelian
            return L, LeviData((), (0,))
        return L, LeviData(tuple(range(L.dim)), ())
    if f == "abelian":
        L = build_abelian(spec.n)
    else:
        L = build_heisenberg(spec.n)
    return L, LeviData((), tuple(range(L.dim)))
