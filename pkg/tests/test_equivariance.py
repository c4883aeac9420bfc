from collections import Counter
from fractions import Fraction
from itertools import combinations

import pytest

from liecoh.catalog import (
    build_abelian,
    build_cga,
    build_mass_extension,
    build_sl2,
)
from liecoh.cochains import CochainIndexing, differential_matrix
from liecoh.equivariance import (
    action_matrix,
    hochschild_serre_check,
    hom_invariants_dim,
    invariant_cohomology,
)
from liecoh.lie import LeviData, LieValidationError, adjoint_rep, restrict_rep, trivial_rep
from liecoh.linalg import SparseMatrix, apply, kernel_basis, rank

from oracle import DenseCochains, colex_subsets, dense_structure


def _unit(idx, S, a):
    v = [Fraction(0)] * idx.dim
    v[idx.index(S, a)] = Fraction(1)
    return v


# ---------------------------------------------------------------- action examples


def test_abelian_action_is_zero():
    L = build_abelian(3)
    for x in range(3):
        for n in range(3):
            assert action_matrix(L, (0, 1, 2), adjoint_rep(L), n, x).is_zero()


@pytest.mark.parametrize("two_ell", [1, 2, 3])
def test_d_action_on_translation_cochains(two_ell):
    L, levi = build_cga(2, two_ell)
    rad = levi.radical
    pos = {g: i for i, g in enumerate(rad)}
    A = action_matrix(L, rad, adjoint_rep(L), 1, L.index("D"))
    idx = CochainIndexing(len(rad), L.dim, 1)
    for n in range(two_ell + 1):
        p = L.index(f"P_{n}_1")
        eig = two_ell - 2 * n
        # valued in the same translation: the two terms cancel
        w = _unit(idx, (pos[p],), p)
        assert all(v == 0 for v in apply(A, w))
        # valued in H: (2 - eigenvalue) times the same cochain
        w = _unit(idx, (pos[p],), L.index("H"))
        assert apply(A, w) == [(2 - eig) * v for v in w]


def test_degree_zero_action_is_module_action():
    L, levi = build_cga(2, 1)
    R = adjoint_rep(L)
    for x in levi.semisimple:
        assert action_matrix(L, levi.radical, R, 0, x) == R.actions[x]


def test_action_requires_ideal():
    L, levi = build_cga(2, 1)
    with pytest.raises(LieValidationError):
        action_matrix(L, levi.semisimple, adjoint_rep(L), 1, 0)


def _dense_action(L, r, R, n, x):
    """Direct evaluation of (x.w)(e_1..e_n) = x.w(e..) - sum_i w(.., [x, e_i], ..)."""
    struct = dense_structure(L)
    m = R.module_dim
    rpos = {g: i for i, g in enumerate(r)}
    # structure of r itself does not matter for evaluation; only arguments do
    sub = [[[Fraction(0)] * len(r) for _ in r] for _ in r]
    dense = DenseCochains(sub, None, m)
    act = R.actions[x].to_dense()
    cols = []
    for w in dense.basis(n):
        out = []
        for T in colex_subsets(len(r), n):
            val = dense.evaluate(w, T, m)
            total = [sum(act[b][a] * val[a] for a in range(m)) for b in range(m)]
            for i in range(n):
                br = struct[x][r[T[i]]]
                args = []
                for j, t in enumerate(T):
                    if j == i:
                        args.append([br[g] for g in r])
                    else:
                        args.append([Fraction(int(s == t)) for s in range(len(r))])
                assert all(br[g] == 0 for g in range(L.dim) if g not in rpos)
                sub_val = dense.eval_multilinear(w, args)
                total = [a - b for a, b in zip(total, sub_val)]
            out.extend(total)
        cols.append(out)
    return [list(row) for row in zip(*cols)] if cols else []


@pytest.mark.parametrize(
    "make, coeff",
    [
        (lambda: build_cga(2, 1), "adjoint"),
        (lambda: build_cga(3, 0), "adjoint"),
        (lambda: build_mass_extension(1, 1), "adjoint"),
        (lambda: build_cga(2, 2), "trivial"),
    ],
)
@pytest.mark.parametrize("n", [0, 1, 2])
def test_action_matches_dense_evaluation(make, coeff, n):
    L, levi = make()
    R = adjoint_rep(L) if coeff == "adjoint" else trivial_rep(L, 2)
    for x in range(L.dim):
        got = action_matrix(L, levi.radical, R, n, x).to_dense()
        assert got == _dense_action(L, levi.radical, R, n, x), (x, n)


# ---------------------------------------------------------------- compatibility


@pytest.mark.parametrize("make", [lambda: build_cga(2, 1), lambda: build_cga(3, 2)], ids=["cga-2-1", "cga-3-2"])
@pytest.mark.parametrize("n", [0, 1, 2])
def test_action_commutes_with_differential(make, n):
    L, levi = make()
    R = adjoint_rep(L)
    Rr = restrict_rep(R, levi.radical)
    d = differential_matrix(Rr.algebra, Rr, n)
    for x in range(L.dim):
        a_n = action_matrix(L, levi.radical, R, n, x)
        a_next = action_matrix(L, levi.radical, R, n + 1, x)
        assert a_next @ d == d @ a_n


def test_action_preserves_cocycles():
    L, levi = build_cga(2, 1)
    R = adjoint_rep(L)
    Rr = restrict_rep(R, levi.radical)
    Z = kernel_basis(differential_matrix(Rr.algebra, Rr, 2))
    for x in levi.semisimple:
        A = action_matrix(L, levi.radical, R, 2, x)
        for v in Z.vectors:
            assert Z.contains(apply(A, v))


def test_action_is_a_representation():
    L, levi = build_cga(2, 2)
    R = adjoint_rep(L)
    n = 1
    A = {x: action_matrix(L, levi.radical, R, n, x) for x in range(L.dim)}
    for i, j in combinations(range(L.dim), 2):
        lhs = SparseMatrix.zeros(*A[0].shape)
        for k, c in L.structure(i, j).items():
            lhs = lhs + SparseMatrix(*A[k].shape, {key: c * v for key, v in A[k].entries.items()})
        assert lhs == A[i] @ A[j] - A[j] @ A[i]


# ---------------------------------------------------------------- invariant cohomology


@pytest.mark.parametrize("two_ell", [6, 7])
def test_cga_d2_invariants(two_ell):
    L, levi = build_cga(2, two_ell)
    rep = invariant_cohomology(L, levi, adjoint_rep(L), 2)
    assert (rep.dim_Z_inv, rep.dim_B_inv, rep.dim_H_inv) == (4, 3, 1)


@pytest.mark.parametrize("two_ell", [3, 5])
def test_mass_d2_invariants(two_ell):
    L, levi = build_mass_extension(2, two_ell)
    rep = invariant_cohomology(L, levi, adjoint_rep(L), 2)
    assert (rep.dim_Z_inv, rep.dim_B_inv) == (6, 5)


def test_cga_half_d3_invariants_vanish():
    L, levi = build_cga(3, 1)
    rep = invariant_cohomology(L, levi, adjoint_rep(L), 2)
    assert (rep.dim_Z_inv, rep.dim_B_inv) == (0, 0)


@pytest.mark.parametrize("make", [lambda: build_cga(2, 3), lambda: build_mass_extension(2, 3), lambda: build_cga(3, 2)])
@pytest.mark.parametrize("q", [1, 2])
def test_invariant_coboundaries_are_coboundaries_of_invariants(make, q):
    # B^q intersected with the invariants equals d applied to invariant (q-1)-cochains
    L, levi = make()
    R = adjoint_rep(L)
    Rr = restrict_rep(R, levi.radical)
    inv_prev = kernel_basis(
        SparseMatrix.vstack([action_matrix(L, levi.radical, R, q - 1, x) for x in levi.semisimple])
    )
    d = differential_matrix(Rr.algebra, Rr, q - 1)
    images = [apply(d, v) for v in inv_prev.vectors]
    dim_image = rank(SparseMatrix.from_dense(images)) if images else 0
    assert dim_image == invariant_cohomology(L, levi, R, q).dim_B_inv


def test_invariant_basis_is_invariant():
    L, levi = build_cga(2, 6)
    R = adjoint_rep(L)
    rep = invariant_cohomology(L, levi, R, 2, basis=True)
    assert rep.invariant_cocycle_basis.dim == 4
    for x in levi.semisimple:
        A = action_matrix(L, levi.radical, R, 2, x)
        for v in rep.invariant_cocycle_basis.vectors:
            assert not any(apply(A, v))


def test_invalid_levi_rejected():
    L, _ = build_cga(2, 1)
    with pytest.raises(LieValidationError):
        invariant_cohomology(L, LeviData((0, 2), tuple(i for i in range(L.dim) if i not in (0, 2))), adjoint_rep(L), 2)


# ---------------------------------------------------------------- Hochschild-Serre


@pytest.mark.parametrize(
    "make, value",
    [
        (lambda: build_cga(3, 1), 0),
        (lambda: build_cga(3, 2), 1),
        (lambda: build_mass_extension(2, 3), 1),
    ],
    ids=["cga-3-1", "cga-3-2", "mass-2-3"],
)
def test_hs_examples(make, value):
    L, levi = make()
    rep = hochschild_serre_check(L, levi, adjoint_rep(L), 2)
    assert (rep.predicted_dim, rep.direct_dim, rep.match) == (value, value, True)
    assert rep.semisimple_terms == {0: 1, 1: 0, 2: 0}
    assert set(rep.invariant_terms) == {0, 1, 2}


def test_hs_degree_three_uses_top_class_of_sl2():
    L, levi = build_cga(1, 2)
    for R in (adjoint_rep(L), trivial_rep(L, 1)):
        rep = hochschild_serre_check(L, levi, R, 3)
        assert rep.semisimple_terms[3] == 1
        assert rep.match


def test_hs_semisimple_algebra_alone():
    L = build_sl2()
    rep = hochschild_serre_check(L, LeviData((0, 1, 2), ()), trivial_rep(L, 1), 3)
    assert rep.predicted_dim == rep.direct_dim == 1


def test_hs_report_dict():
    L, levi = build_cga(2, 0)
    d = hochschild_serre_check(L, levi, adjoint_rep(L), 2).as_dict()
    assert d["match"] is True and d["direct_dim"] == 2
    assert list(d["invariant_terms"]) == ["0", "1", "2"]


# ---------------------------------------------------------------- Hom_s(Lambda^k V, V)


def _weight_multiplicity(two_ell, k):
    """Multiplicity of V = V(two_ell) x C^3 in Lambda^k V for sl2 + so(3), by weights.

    Weights are (sl2 weight, doubled so(3) weight). For a product of two sl2's
    the multiplicity of highest weight (a, b) is
    m(a, b) - m(a+2, b) - m(a, b+2) + m(a+2, b+2).
    """
    weights = [(two_ell - 2 * n, s) for n in range(two_ell + 1) for s in (2, 0, -2)]
    mult = Counter(
        tuple(map(sum, zip(*c))) if c else (0, 0) for c in combinations(weights, k)
    )
    m = lambda a, b: mult.get((a, b), 0)
    a, b = two_ell, 2
    return m(a, b) - m(a + 2, b) - m(a, b + 2) + m(a + 2, b + 2)


@pytest.mark.parametrize("two_ell, k", [(1, 2), (2, 2), (2, 3), (1, 3), (3, 2), (0, 2), (0, 3)])
def test_hom_invariants_match_weight_count(two_ell, k):
    L, levi = build_cga(3, two_ell)
    assert hom_invariants_dim(L, levi, k) == _weight_multiplicity(two_ell, k)


def test_hom_invariants_half_integer_degree_two():
    L, levi = build_cga(3, 1)
    assert hom_invariants_dim(L, levi, 2) == 0


def test_hom_invariants_degree_zero():
    L, levi = build_cga(3, 2)
    assert hom_invariants_dim(L, levi, 0) == 0


def test_hom_invariants_needs_abelian_radical():
    L, levi = build_cga(2, 1)
    with pytest.raises(LieValidationError):
        hom_invariants_dim(L, levi, 2)
