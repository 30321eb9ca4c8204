import random

import pytest

from helpers import CORPUS, CORPUS_NAMES, random_map
from weakhopf import zoo
from weakhopf.lincore import LinMap, identity, tensor
from weakhopf.wbm import (
    TAU_COUNTERPART,
    BraidingError,
    InducedMonad,
    NotAMorphism,
    WeakBimonoid,
    base_iso,
    check_morphism,
    check_tau_axioms,
    check_weak_bimonoid,
    sqcap,
    sqcap_checks,
    t_map,
    tau,
    tau0,
    validate_monoid_comonoid,
)

SCALAR = WeakBimonoid(1, identity(1), identity(1), identity(1), identity(1))


def test_trivial_scalar_bimonoid():
    assert check_weak_bimonoid(SCALAR).ok
    assert check_tau_axioms(SCALAR).ok


def test_group_algebra_monoid_comonoid_laws(z2):
    rep = validate_monoid_comonoid(z2)
    assert rep.ok and len(rep) == 6


def test_nonassociative_algebra_has_witness():
    rep = validate_monoid_comonoid(zoo.nonassociative_algebra())
    assert rep.names == [
        "mu_associative", "mu_left_unit", "mu_right_unit",
        "delta_coassociative", "delta_left_counit", "delta_right_counit",
    ]
    bad = rep.failures()
    assert "mu_associative" in [c.name for c in bad]
    lhs, rhs = next(c for c in bad if c.name == "mu_associative").witness
    assert lhs != rhs and lhs.shape == (2, 8)


def test_right_zero_table_is_associative():
    # e.e = e, e.f = f, f.f = f, f.e = e gives x.y = y, which associates
    mu = LinMap(4, 2, [[1, 0, 1, 0], [0, 1, 0, 1]])
    assert mu @ tensor(mu, identity(2)) == mu @ tensor(identity(2), mu)


def test_corpus_passes_axioms(entry):
    rep = check_weak_bimonoid(entry.B)
    assert rep.ok, rep.failures()
    assert len(rep) == 13


def test_broken_comultiplication_verdicts():
    rep = check_weak_bimonoid(zoo.broken_unit_coproduct())
    failed = {c.name for c in rep.failures()}
    assert failed == {
        "delta_left_counit",
        "unit_counit_exchange",
        "counit_weak_multiplicative_braided",
        "counit_weak_multiplicative",
    }
    for c in rep.failures():
        lhs, rhs = c.witness
        assert lhs != rhs


def test_tau_on_unit_objects_is_delta(entry):
    assert tau(entry.B, 1, 1) == entry.B.delta
    assert tau0(entry.B) == entry.B.eps


def test_tau_diagonal_1_2(diagonal2):
    # with X = 1: e_y (x) e_b goes to e_b (x) e_y (x) e_b
    t = tau(diagonal2, 1, 2)
    assert t.shape == (8, 4)
    expected = {}
    for y in range(2):
        for b in range(2):
            expected[(b * 4 + y * 2 + b, y * 2 + b)] = 1
    assert t == LinMap(4, 8, expected)


def test_tau_counit(z2):
    M = InducedMonad(z2)
    t = tau(z2, 2, 1)
    lhs = tensor(identity(4), tau0(z2)) @ t
    assert lhs == identity(4)
    assert M.T(2) == 4


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_tau_natural(name):
    B = CORPUS[name].B
    rng = random.Random(name)
    idB = identity(B.dim)
    for _ in range(10):
        X, Y, X2, Y2 = (rng.randint(1, 2) for _ in range(4))
        f, g = random_map(rng, X2, X), random_map(rng, Y2, Y)
        lhs = tau(B, X2, Y2) @ tensor(f, g, idB)
        rhs = tensor(f, idB, g, idB) @ tau(B, X, Y)
        assert lhs == rhs


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_tau_coassociative_in_both_bracketings(name):
    M = InducedMonad(CORPUS[name].B)
    for X in (1, 2):
        for Y in (1, 2):
            for Z in (1, 2):
                left = tensor(M.tau(X, Y), identity(M.T(Z))) @ M.tau(X * Y, Z)
                right = tensor(identity(M.T(X)), M.tau(Y, Z)) @ M.tau(X, Y * Z)
                assert left == right


def test_sqcap_examples(diagonal2, z2, pair2):
    assert sqcap(diagonal2) == identity(2)
    assert sqcap(z2) == LinMap(2, 2, [[1, 1], [0, 0]])
    # f_ij -> f_jj on basis f11 f12 f21 f22
    assert sqcap(pair2) == LinMap(4, 4, {(0, 0): 1, (3, 1): 1, (0, 2): 1, (3, 3): 1})


def test_sqcap_laws(entry):
    assert all(c.holds for c in sqcap_checks(entry.B))
    e = sqcap(entry.B)
    assert e @ e == e and e == t_map(entry.B)


def test_tau_axioms_on_corpus(entry):
    rep = check_tau_axioms(entry.B, (1, 2))
    assert rep.ok, [c.name + " " + c.where for c in rep.failures()]


def test_broken_comultiplication_fails_tau_level(z2):
    bad = zoo.mutate(z2, "comultiplication_multiplicative")
    assert not check_weak_bimonoid(bad).holds("comultiplication_multiplicative")
    assert not check_tau_axioms(bad, (1,)).holds("tau_multiplicative")


@pytest.mark.parametrize("target", zoo.MUTATION_TARGETS)
@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_mutants_agree_between_levels(name, target):
    B = zoo.mutate(CORPUS[name].B, target)
    b_level = check_weak_bimonoid(B)
    t_level = check_tau_axioms(B, (1, 2))
    assert b_level.ok == t_level.ok
    for b_name, t_name in TAU_COUNTERPART.items():
        assert b_level.holds(b_name) == t_level.holds(t_name), (b_name, t_name)


def test_custom_braid_is_b_level_only():
    ext = zoo.exterior_algebra()
    assert check_weak_bimonoid(ext).ok
    assert not check_weak_bimonoid(ext.replace(braid=None)).ok
    with pytest.raises(BraidingError):
        check_tau_axioms(ext)


def test_braid_must_satisfy_yang_baxter():
    B = CORPUS["z2"].B
    nonbraid = LinMap(4, 4, [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    with pytest.raises(BraidingError):
        B.replace(braid=nonbraid)


def test_identity_morphism(diagonal2):
    assert check_morphism(identity(2), diagonal2, diagonal2).ok
    assert base_iso(identity(2), diagonal2, diagonal2) == identity(2)


def test_inversion_of_z3_is_a_morphism():
    B = CORPUS["z3"].B
    inv = LinMap(3, 3, {(0, 0): 1, (2, 1): 1, (1, 2): 1})
    assert check_morphism(inv, B, B).ok
    assert base_iso(inv, B, B) == identity(1)


def test_sign_map_is_not_a_morphism(z2):
    sign = LinMap(2, 2, [[1, 0], [0, -1]])
    rep = check_morphism(sign, z2, z2)
    failed = {c.name for c in rep.failures()}
    assert failed == {"preserves_comultiplication", "preserves_counit"}
    with pytest.raises(NotAMorphism):
        base_iso(sign, z2, z2)


def test_projection_to_group_algebra_breaks_counit(diagonal2, z2):
    g = LinMap(2, 2, [[1, 0], [0, 0]])
    rep = check_morphism(g, diagonal2, z2)
    assert not rep.holds("preserves_counit")
    with pytest.raises(NotAMorphism, match="preserves_counit"):
        base_iso(g, diagonal2, z2)
