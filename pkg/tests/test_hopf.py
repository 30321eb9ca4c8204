import pytest

from helpers import CORPUS, CORPUS_NAMES, HOPF_NAMES
from weakhopf import zoo
from weakhopf.hopf import (
    E_TKTK,
    F_KK,
    antipode_identity_checks,
    canonical_map,
    check_left_hopf,
    chi_witness,
    convolve,
    fusion,
    hopf_verdicts,
    idempotent_E_T,
    idempotent_F,
    left_canonical_map,
    opposite,
    opposite_antipode_checks,
    solve_antipode,
    structure_maps,
    verify_whm,
)
from weakhopf.lincore import LinMap, identity, inverse, is_invertible, rank, swap
from weakhopf.wbm import check_weak_bimonoid, sqcap
from weakhopf.zoo import inverse_permutation

GROUP_NAMES = ["z2", "z3", "z4"]
DIAG = LinMap(4, 4, {(0, 0): 1, (3, 3): 1})


# -- canonical maps ---------------------------------------------------------


def test_canonical_map_of_z2(z2):
    can = canonical_map(z2, 1, 1)
    # x (x) y  maps to  x y (x) y for group-likes; basis 1, g
    expected = LinMap(4, 4, {(0, 0): 1, (3, 1): 1, (2, 2): 1, (1, 3): 1})
    assert can == expected
    assert is_invertible(can)


def test_canonical_map_of_idempotent_monoid(idempotent_monoid):
    assert rank(canonical_map(idempotent_monoid, 1, 1)) == 3


def test_canonical_map_of_scalar():
    assert canonical_map(CORPUS["trivial"].B, 1, 1) == identity(1)


def test_fusion_examples(diagonal2, z2):
    assert fusion(z2, 1) == canonical_map(z2, 1, 1)
    assert fusion(CORPUS["trivial"].B, 2) == identity(2)
    assert fusion(diagonal2, 1) == DIAG


def test_fusion_is_canonical_map_at_unit(entry):
    for X in (1, 2):
        assert fusion(entry.B, X) == canonical_map(entry.B, X, 1)


def test_left_canonical_map_shape(entry):
    n = entry.B.dim
    assert left_canonical_map(entry.B, 2, 1).shape == (2 * n * n, 2 * n * n)


# -- idempotents ------------------------------------------------------------


def test_F_examples(diagonal2, z2):
    assert F_KK(z2) == identity(4)
    assert F_KK(diagonal2) == DIAG
    assert E_TKTK(diagonal2) == DIAG and rank(E_TKTK(diagonal2)) == 2


def test_idempotents_are_idempotent(entry):
    for X in (1, 2):
        for Y in (1, 2):
            E, F = idempotent_E_T(entry.B, X, Y), idempotent_F(entry.B, X, Y)
            assert E @ E == E and F @ F == F


@pytest.mark.parametrize("name", GROUP_NAMES)
def test_group_algebras_truncate_nothing(name):
    B = CORPUS[name].B
    for X in (1, 2):
        for Y in (1, 2):
            n = X * B.dim * Y * B.dim
            assert idempotent_E_T(B, X, Y) == identity(n)
            assert idempotent_F(B, X, Y) == identity(n)
            assert is_invertible(canonical_map(B, X, Y))


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_can_sandwiched_by_idempotents(name):
    B = CORPUS[name].B
    for X in (1, 2):
        for Y in (1, 2):
            can = canonical_map(B, X, Y)
            assert idempotent_E_T(B, X, Y) @ can @ idempotent_F(B, X, Y) == can


# -- convolution and structure maps -----------------------------------------


def test_convolution_examples(z2):
    assert convolve(identity(2), identity(2), z2) == LinMap(2, 2, [[1, 1], [0, 0]])
    triv = CORPUS["trivial"].B
    assert convolve(LinMap(1, 1, [[3]]), LinMap(1, 1, [[5]]), triv) == LinMap(1, 1, [[15]])


def test_t_is_convolution_idempotent(entry):
    t = structure_maps(entry.B).t
    assert convolve(t, t, entry.B) == t
    assert t == sqcap(entry.B)


def test_structure_map_examples(diagonal2, z2, pair2):
    sm = structure_maps(diagonal2)
    assert sm.t == sm.r == sm.s == sm.rop == identity(2)
    sm = structure_maps(z2)
    ee = z2.eta @ z2.eps
    assert sm.t == sm.r == sm.s == sm.rop == ee
    sm = structure_maps(pair2)
    # basis f11 f12 f21 f22
    assert sm.t == LinMap(4, 4, {(0, 0): 1, (3, 1): 1, (0, 2): 1, (3, 3): 1})
    assert sm.r == LinMap(4, 4, {(0, 0): 1, (0, 1): 1, (3, 2): 1, (3, 3): 1})


# -- antipode ---------------------------------------------------------------


@pytest.mark.parametrize("name", [n for n in CORPUS_NAMES if CORPUS[n].groupoid is not None])
def test_groupoid_antipode_is_inversion(name):
    e = CORPUS[name]
    res = solve_antipode(e.B)
    assert res.nu == inverse_permutation(e.groupoid)
    assert res.unique and res.invertible
    assert res.equations_report.ok


def test_z2_antipode(z2):
    res = solve_antipode(z2)
    assert res.nu == identity(2) and res.nu_inverse == identity(2)


@pytest.mark.parametrize("name", ["idempotent_monoid", "left_zero_monoid"])
def test_monoids_without_antipode(name):
    res = solve_antipode(CORPUS[name].B)
    assert res.nu is None and not res.exists and not res.invertible
    assert not res.equations_report.holds("antipode_exists")


@pytest.mark.parametrize("name", HOPF_NAMES)
def test_antipode_identities(name):
    B = CORPUS[name].B
    nu = solve_antipode(B).nu
    assert all(c.holds for c in antipode_identity_checks(B, nu))


@pytest.mark.parametrize("name", HOPF_NAMES)
def test_weak_hopf_witness(name):
    B = CORPUS[name].B
    nu = solve_antipode(B).nu
    for X in (1, 2):
        for Y in (1, 2):
            rep = verify_whm(B, X, Y, nu)
            assert rep.ok


def test_chi_inverts_can_on_z2(z2):
    nu = solve_antipode(z2).nu
    chi = chi_witness(z2, nu, 1, 1)
    assert chi == inverse(canonical_map(z2, 1, 1))


def test_chi_on_diagonal(diagonal2):
    nu = solve_antipode(diagonal2).nu
    assert nu == identity(2)
    assert chi_witness(diagonal2, nu, 1, 1) == DIAG


# -- opposite algebra and verdict comparison ------------------------------


def test_opposite_of_commutative_algebra(z2):
    assert opposite(z2) == z2


def test_opposite_of_pair_groupoid(pair2):
    op = opposite(pair2)
    assert op.mu == pair2.mu @ swap(4, 4)
    assert check_weak_bimonoid(op).ok
    res = solve_antipode(pair2)
    assert res.nu_op == res.nu_inverse == res.nu


def test_opposite_braid_is_inverse():
    ext = zoo.exterior_algebra()
    op = opposite(ext)
    assert op.braid == inverse(ext.braid)
    assert check_weak_bimonoid(op).ok


@pytest.mark.parametrize("name", HOPF_NAMES)
def test_inverse_antipode_is_opposite_antipode(name):
    B = CORPUS[name].B
    res = solve_antipode(B)
    assert all(c.holds for c in opposite_antipode_checks(B, res.nu_inverse))
    assert check_left_hopf(B).ok


def test_left_hopf_fails_without_antipode(idempotent_monoid):
    rep = check_left_hopf(idempotent_monoid)
    assert not rep.holds("op_antipode_exists")


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_verdicts_coincide(name):
    v = hopf_verdicts(CORPUS[name].B)
    assert v.coincide
    assert v.right_weak_hopf == CORPUS[name].has_antipode


def test_exterior_algebra_antipode():
    ext = zoo.exterior_algebra()
    res = solve_antipode(ext)
    assert res.nu == LinMap(2, 2, [[1, 0], [0, -1]])
    assert hopf_verdicts(ext).coincide

