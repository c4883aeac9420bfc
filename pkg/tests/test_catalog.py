
import pytest

from liecoh.catalog import (
    CatalogError,
    CatalogSpec,
    build,
    build_abelian,
    build_cga,
    build_d1_cga,
    build_exotic_extension,
    build_heisenberg,
    build_mass_extension,
    build_schrodinger,
    build_sl2,
    build_so,
    cga_dim,
    exotic_coefficient,
    mass_coefficient,
)
from liecoh.lie import check_levi, jacobi_violations


def named(L, name):
    return L.index(name)


@pytest.mark.parametrize("d", range(1, 6))
@pytest.mark.parametrize("two_ell", range(0, 7))
def test_cga_dimension_formula(d, two_ell):
    assert cga_dim(d, two_ell) == d * (d - 1) // 2 + (two_ell + 1) * d + 3
    if d <= 3:
        L, _ = build_cga(d, two_ell)
        assert L.dim == cga_dim(d, two_ell)


@pytest.mark.parametrize("args, dim", [((2, 0), 6), ((2, 5), 16), ((3, 1), 12)])
def test_cga_dimension_examples(args, dim):
    assert build_cga(*args)[0].dim == dim


def test_cga_basis_order():
    L, _ = build_cga(3, 1)
    assert L.labels == (
        "H", "D", "C", "M_1_2", "M_1_3", "M_2_3",
        "P_0_1", "P_0_2", "P_0_3", "P_1_1", "P_1_2", "P_1_3",
    )


def test_cga_brackets_against_table():
    two_ell = 3
    L, _ = build_cga(2, two_ell)
    s = lambda a, b: dict(L.structure(named(L, a), named(L, b)))
    assert s("D", "H") == {named(L, "H"): 2}
    assert s("C", "H") == {named(L, "D"): 1}
    assert s("D", "C") == {named(L, "C"): -2}
    for n in range(two_ell + 1):
        p = named(L, f"P_{n}_1")
        assert s("D", f"P_{n}_1") == ({p: two_ell - 2 * n} if two_ell != 2 * n else {})
        if n:
            assert s("H", f"P_{n}_1") == {named(L, f"P_{n - 1}_1"): -n}
        if n < two_ell:
            assert s("C", f"P_{n}_1") == {named(L, f"P_{n + 1}_1"): two_ell - n}
        # [M_ij, P_n_k] = d_jk P_n_i - d_ik P_n_j
        assert s("M_1_2", f"P_{n}_2") == {named(L, f"P_{n}_1"): 1}
        assert s("M_1_2", f"P_{n}_1") == {named(L, f"P_{n}_2"): -1}


def test_so3_bracket_example():
    L = build_so(3)
    assert L.dim == 3
    assert dict(L.structure(0, 1)) == {2: -1}  # [M_1_2, M_1_3] = -M_2_3


def test_so_small_dims():
    assert build_so(2).is_abelian()
    assert build_so(4).dim == 6
    with pytest.raises(CatalogError):
        build_so(1)


def test_abelian_and_heisenberg():
    A = build_abelian(4)
    assert A.dim == 4 and A.is_abelian()
    Hs = build_heisenberg(3)
    assert Hs.labels == ("p1", "q1", "z")
    assert dict(Hs.structure(0, 1)) == {2: 1}
    assert all(not Hs.structure(2, i) for i in range(3))
    for bad in (2, 4, 1):
        with pytest.raises(CatalogError):
            build_heisenberg(bad)


def test_sl2():
    L = build_sl2()
    assert L.labels == ("H", "D", "C")
    assert jacobi_violations(L) == []


def test_d1_alias():
    for two_ell, dim in ((2, 6), (4, 8)):
        L, levi = build_d1_cga(two_ell)
        assert L.dim == dim
        assert L == build_cga(1, two_ell)[0]
        assert [L.labels[i] for i in levi.semisimple] == ["H", "D", "C"]
        assert all(not L.structure(i, j) for i in levi.radical for j in levi.radical)


def test_d1_spin_zero_is_sl2_plus_line():
    L, levi = build_cga(1, 0)
    p = named(L, "P_0_1")
    assert all(not L.structure(i, p) for i in range(L.dim))


# ---------------------------------------------------------------- coefficients


@pytest.mark.parametrize("m, two_ell, value", [(0, 1, -1), (1, 1, 1), (0, 3, 6)])
def test_mass_coefficient_examples(m, two_ell, value):
    assert mass_coefficient(m, two_ell) == value


@pytest.mark.parametrize("two_ell", [1, 3, 5])
def test_mass_coefficient_antisymmetry(two_ell):
    for m in range(two_ell + 1):
        assert mass_coefficient(m, two_ell) == -mass_coefficient(two_ell - m, two_ell)


@pytest.mark.parametrize("two_ell", [0, 2, 4, 6])
def test_exotic_coefficient_symmetry(two_ell):
    for m in range(two_ell + 1):
        assert exotic_coefficient(m, two_ell) == exotic_coefficient(two_ell - m, two_ell)


def test_exotic_coefficient_values():
    assert [exotic_coefficient(m, 2) for m in range(3)] == [2, -1, 2]
    assert exotic_coefficient(0, 0) == 1


def test_coefficient_domain_errors():
    with pytest.raises(CatalogError):
        mass_coefficient(0, 2)
    with pytest.raises(CatalogError):
        mass_coefficient(4, 3)
    with pytest.raises(CatalogError):
        exotic_coefficient(0, 1)
    with pytest.raises(CatalogError):
        exotic_coefficient(-1, 2)


# ---------------------------------------------------------------- extensions


@pytest.mark.parametrize("args, dim", [((2, 1), 9), ((1, 1), 6), ((3, 1), 13)])
def test_mass_extension_dimensions(args, dim):
    L, levi = build_mass_extension(*args)
    assert L.dim == dim
    assert L.labels[-1] == "M"
    assert L.dim - 1 in levi.radical


def test_mass_extension_bracket():
    L, _ = build_mass_extension(2, 3)
    M = named(L, "M")
    for m in range(4):
        for i in (1, 2):
            for j in (1, 2):
                got = dict(L.structure(named(L, f"P_{m}_{i}"), named(L, f"P_{3 - m}_{j}")))
                want = {M: mass_coefficient(m, 3)} if i == j else {}
                assert got == want


def test_mass_extension_center():
    L, _ = build_mass_extension(3, 3)
    M = named(L, "M")
    assert all(not L.structure(i, M) for i in range(L.dim))


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("two_ell", [1, 3, 5])
def test_mass_extension_modulo_center_is_cga(d, two_ell):
    L, _ = build_mass_extension(d, two_ell)
    G, _ = build_cga(d, two_ell)
    M = L.dim - 1
    quotient = {}
    for key, vec in L.brackets.items():
        if M in key:
            continue
        rest = {k: v for k, v in vec.items() if k != M}
        if rest:
            quotient[key] = rest
    assert quotient == dict(G.brackets)
    assert L.labels[:-1] == G.labels


def test_schrodinger_is_spin_half_mass_extension():
    assert build_schrodinger(2)[0] == build_mass_extension(2, 1)[0]


def test_mass_extension_rejects_integer_spin():
    with pytest.raises(CatalogError):
        build_mass_extension(2, 2)


def test_exotic_extension():
    L, levi = build_exotic_extension(0)
    assert L.dim == 7
    assert dict(L.structure(named(L, "P_0_1"), named(L, "P_0_2"))) == {named(L, "Theta"): 1}
    L, _ = build_exotic_extension(2)
    assert L.dim == (2 + 1) * 2 + 4 + 1
    T = named(L, "Theta")
    for m in range(3):
        got = dict(L.structure(named(L, f"P_{m}_1"), named(L, f"P_{2 - m}_2")))
        assert got == {T: exotic_coefficient(m, 2)}
        assert not L.structure(named(L, f"P_{m}_1"), named(L, f"P_{2 - m}_1"))
    with pytest.raises(CatalogError):
        build_exotic_extension(3)


# ---------------------------------------------------------------- validity grid


def _grid():
    for d in range(1, 5):
        for t in range(7):
            yield f"cga-{d}-{t}", lambda d=d, t=t: build_cga(d, t)
            if t % 2:
                yield f"mass-{d}-{t}", lambda d=d, t=t: build_mass_extension(d, t)
    for t in range(0, 7, 2):
        yield f"exotic-{t}", lambda t=t: build_exotic_extension(t)


GRID = list(_grid())


@pytest.mark.parametrize("name, make", GRID, ids=[g[0] for g in GRID])
def test_jacobi_and_levi_on_grid(name, make):
    L, levi = make()
    assert jacobi_violations(L) == []
    assert check_levi(L, levi, trusted=True).valid


@pytest.mark.parametrize("d", [3, 4])
def test_radical_abelian_for_d_at_least_3(d):
    L, levi = build_cga(d, 2)
    assert all(not L.structure(i, j) for i in levi.radical for j in levi.radical)


def test_radical_d2_not_abelian():
    L, levi = build_cga(2, 1)
    assert any(L.structure(i, j) for i in levi.radical for j in levi.radical)


# ---------------------------------------------------------------- CatalogSpec


def test_catalog_spec_validation_and_labels():
    assert CatalogSpec("cga", d=2, two_ell=1).label == "cga(d=2,two_ell=1)"
    assert CatalogSpec("heisenberg", n=5).label == "heisenberg(5)"
    with pytest.raises(CatalogError):
        CatalogSpec("cga-mass", d=2, two_ell=2)
    with pytest.raises(CatalogError):
        CatalogSpec("cga-exotic", d=3, two_ell=2)
    with pytest.raises(CatalogError):
        CatalogSpec("nonsense")


@pytest.mark.parametrize(
    "spec",
    [
        CatalogSpec("sl2"),
        CatalogSpec("so", d=2),
        CatalogSpec("so", d=3),
        CatalogSpec("so", d=4),
        CatalogSpec("abelian", n=3),
        CatalogSpec("heisenberg", n=5),
        CatalogSpec("schrodinger", d=1),
        CatalogSpec("cga-exotic", d=2, two_ell=2),
    ],
    ids=lambda s: s.label,
)
def test_build_dispatch_gives_valid_levi(spec):
    L, levi = build(spec)
    assert check_levi(L, levi, trusted=True).valid
