"""Right B-modules and their truncated monoidal structure.

Everything here is obtained by splitting idempotents. Splitting ``sqcap``
gives the base object ``R``; splitting ``E_{A,C}`` on ``A (x) C`` gives the
truncated product ``A [] C`` together with a projection ``p`` and an
inclusion ``i``. All splittings are deterministic, so repeated runs return
identical matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Mapping, Sequence

from .lincore import (
    AlgebraError,
    LinMap,
    NotIdempotent,
    chain,
    identity,
    split_idempotent,
    tensor,
)
from .wbm import (
    AxiomCheck,
    AxiomReport,
    BraidingError,
    IdempotencyFailed,
    WeakBimonoid,
    check_equal,
    sqcap,
)


class ModuleLawFailed(AlgebraError):
    pass


class FrobeniusCheckFailed(AlgebraError):
    pass


class ConstraintNotInvertible(AlgebraError):
    pass


class BimoduleLawFailed(AlgebraError):
    pass


class CoherenceFailed(AlgebraError):
    def __init__(self, message: str, report: AxiomReport | None = None):
        super().__init__(message)
        self.report = report


def _require_symmetric(B: WeakBimonoid) -> None:
    if not B.symmetric:
        raise BraidingError("module-level constructions need the symmetric swap")


# -- modules ----------------------------------------------------------------


@dataclass(frozen=True)
class RightModule:
    carrier: int
    action: LinMap


def module_laws(A: RightModule, B: WeakBimonoid) -> AxiomReport:
    n = B.dim
    if A.action.shape != (A.carrier, A.carrier * n):
        raise ModuleLawFailed(
            f"action has shape {A.action.shape}, expected {(A.carrier, A.carrier * n)}"
        )
    a, one_A = A.action, identity(A.carrier)
    return AxiomReport("right module laws", (
        check_equal("action_associative", a @ tensor(a, B.one), a @ tensor(one_A, B.mu)),
        check_equal("action_unital", a @ tensor(one_A, B.eta), one_A),
    ))


def make_module(B: WeakBimonoid, carrier: int, action: LinMap) -> RightModule:
    A = RightModule(carrier, action)
    rep = module_laws(A, B)
    if not rep.ok:
        raise ModuleLawFailed(", ".join(c.name for c in rep.failures()) + " fail")
    return A


def regular_module(B: WeakBimonoid) -> RightModule:
    return RightModule(B.dim, B.mu)


def is_module_morphism(f: LinMap, A: RightModule, A2: RightModule, B: WeakBimonoid) -> bool:
    return f @ A.action == A2.action @ tensor(f, B.one)


# -- the base monoid --------------------------------------------------------


@dataclass(frozen=True)
class BaseMonoid:
    R_dim: int
    P: LinMap
    I: LinMap
    r_action: LinMap
    mu_R: LinMap
    eta_R: LinMap
    delta_R: LinMap
    eps_R: LinMap
    laws: AxiomReport

    @property
    def module(self) -> RightModule:
        return RightModule(self.R_dim, self.r_action)


def separable_frobenius_laws(
    mu: LinMap, eta: LinMap, delta: LinMap, eps: LinMap, dim: int
) -> AxiomReport:
    one = identity(dim)
    return AxiomReport("separable Frobenius monoid", (
        check_equal("associative", mu @ tensor(mu, one), mu @ tensor(one, mu)),
        check_equal("left_unit", mu @ tensor(eta, one), one),
        check_equal("right_unit", mu @ tensor(one, eta), one),
        check_equal("coassociative", tensor(delta, one) @ delta, tensor(one, delta) @ delta),
        check_equal("left_counit", tensor(eps, one) @ delta, one),
        check_equal("right_counit", tensor(one, eps) @ delta, one),
        check_equal("frobenius_left", tensor(mu, one) @ tensor(one, delta), delta @ mu),
        check_equal("frobenius_right", tensor(one, mu) @ tensor(delta, one), delta @ mu),
        check_equal("separable", mu @ delta, one),
    ))


def _E(A: RightModule, C: RightModule, B: WeakBimonoid) -> LinMap:
    M = B.monad
    return chain(M.u(A.carrier * C.carrier), M.tau(A.carrier, C.carrier),
                 tensor(A.action, C.action))


@lru_cache(maxsize=None)
def base_monoid(B: WeakBimonoid) -> BaseMonoid:
    """Split ``sqcap`` and equip its image with monoid and comonoid structure."""
    _require_symmetric(B)
    split = sqcap_split(B)
    P, I, k = split.P, split.I, split.rank
    r_action = chain(tensor(I, B.one), B.mu, P)
    R = RightModule(k, r_action)
    E_RR = _E(R, R, B)
    one_R = identity(k)
    mu_R = chain(E_RR, tensor(one_R, I), tensor(one_R, B.eps))
    eta_R = P @ B.eta
    delta_R = chain(tensor(one_R, B.eta), tensor(one_R, P), E_RR)
    eps_R = B.eps @ I
    laws = separable_frobenius_laws(mu_R, eta_R, delta_R, eps_R, k)
    laws = laws.extend(module_laws(R, B).checks)
    if not laws.ok:
        raise FrobeniusCheckFailed(", ".join(c.name for c in laws.failures()) + " fail")
    return BaseMonoid(k, P, I, r_action, mu_R, eta_R, delta_R, eps_R, laws)


def sqcap_split(B: WeakBimonoid):
    return split_idempotent(sqcap(B))


# -- truncated tensor products ----------------------------------------------


@dataclass(frozen=True)
class ModuleTensor:
    left: RightModule
    right: RightModule
    E: LinMap
    p: LinMap
    i: LinMap
    product: RightModule


@lru_cache(maxsize=None)
def module_tensor(A: RightModule, C: RightModule, B: WeakBimonoid) -> ModuleTensor:
    _require_symmetric(B)
    for X in (A, C):
        rep = module_laws(X, B)
        if not rep.ok:
            raise ModuleLawFailed(", ".join(c.name for c in rep.failures()) + " fail")
    E = _E(A, C, B)
    try:
        split = split_idempotent(E)
    except NotIdempotent as exc:
        raise IdempotencyFailed(f"E is not idempotent: {exc}") from exc
    p, i = split.P, split.I
    M = B.monad
    action = chain(tensor(i, B.one), M.tau(A.carrier, C.carrier), tensor(A.action, C.action), p)
    prod = RightModule(split.rank, action)
    rep = module_laws(prod, B)
    if not rep.ok:
        raise ModuleLawFailed("truncated product is not a module")
    return ModuleTensor(A, C, E, p, i, prod)


def box(A: RightModule, C: RightModule, B: WeakBimonoid) -> RightModule:
    return module_tensor(A, C, B).product


def box_map(f: LinMap, g: LinMap, src: ModuleTensor, dst: ModuleTensor) -> LinMap:
    """``f [] g = p' (f (x) g) i``."""
    return chain(src.i, tensor(f, g), dst.p)


# -- unit constraints -------------------------------------------------------


@dataclass(frozen=True)
class UnitConstraints:
    rho: LinMap
    lam: LinMap
    rho_inv: LinMap
    lam_inv: LinMap


def unit_constraints(A: RightModule, B: WeakBimonoid) -> UnitConstraints:
    R = base_monoid(B)
    Rm = R.module
    AR = module_tensor(A, Rm, B)
    RA = module_tensor(Rm, A, B)
    M = B.monad
    a, one_A = A.action, identity(A.carrier)
    rho = chain(AR.i, tensor(one_A, R.I), tensor(one_A, B.eps))
    lam = chain(RA.i, tensor(R.I, one_A), tensor(B.eps, one_A))
    rho_inv = chain(M.u(A.carrier), M.tau(A.carrier, 1), tensor(a, R.P), AR.p)
    lam_inv = chain(M.u(A.carrier), M.tau(1, A.carrier), tensor(R.P, a), RA.p)
    problems = []
    if rho @ rho_inv != one_A or rho_inv @ rho != identity(AR.product.carrier):
        problems.append("right unit constraint")
    if lam @ lam_inv != one_A or lam_inv @ lam != identity(RA.product.carrier):
        problems.append("left unit constraint")
    if rho @ AR.product.action != a @ tensor(rho, B.one):
        problems.append("right unit constraint is not B-linear")
    if lam @ RA.product.action != a @ tensor(lam, B.one):
        problems.append("left unit constraint is not B-linear")
    if problems:
        raise ConstraintNotInvertible("; ".join(problems))
    return UnitConstraints(rho, lam, rho_inv, lam_inv)


# -- associativity ----------------------------------------------------------


def associator(A: RightModule, C: RightModule, D: RightModule, B: WeakBimonoid) -> LinMap:
    """``(A [] C) [] D -> A [] (C [] D)``."""
    AC = module_tensor(A, C, B)
    CD = module_tensor(C, D, B)
    AC_D = module_tensor(AC.product, D, B)
    A_CD = module_tensor(A, CD.product, B)
    return chain(
        AC_D.i,
        tensor(AC.i, identity(D.carrier)),
        tensor(identity(A.carrier), CD.p),
        A_CD.p,
    )


def associator_inverse(A: RightModule, C: RightModule, D: RightModule, B: WeakBimonoid) -> LinMap:
    AC = module_tensor(A, C, B)
    CD = module_tensor(C, D, B)
    AC_D = module_tensor(AC.product, D, B)
    A_CD = module_tensor(A, CD.product, B)
    return chain(
        A_CD.i,
        tensor(identity(A.carrier), CD.i),
        tensor(AC.p, identity(D.carrier)),
        AC_D.p,
    )


def E3(A: RightModule, C: RightModule, D: RightModule, B: WeakBimonoid, *, left_first: bool = True) -> LinMap:
    """The triple idempotent on ``A (x) C (x) D``, from either bracketing of ``tau``."""
    M = B.monad
    a, c, d = A.carrier, C.carrier, D.carrier
    if left_first:
        t3 = tensor(M.tau(a, c), identity(M.T(d))) @ M.tau(a * c, d)
    else:
        t3 = tensor(identity(M.T(a)), M.tau(c, d)) @ M.tau(a, c * d)
    return chain(M.u(a * c * d), t3, tensor(A.action, C.action, D.action))


def _label(names: Sequence[str], *idx: int) -> str:
    return "(" + ",".join(names[k] for k in idx) + ")"


def _pair_checks(X: RightModule, Y: RightModule, B: WeakBimonoid, where: str) -> list[AxiomCheck]:
    XY = module_tensor(X, Y, B)
    k = XY.product.carrier
    return [
        check_equal("E_idempotent", XY.E @ XY.E, XY.E, where),
        check_equal("inclusion_after_projection", XY.i @ XY.p, XY.E, where),
        check_equal("projection_after_inclusion", XY.p @ XY.i, identity(k), where),
    ]


def _triple_checks(X: RightModule, Y: RightModule, Z: RightModule, B: WeakBimonoid,
                   where: str) -> list[AxiomCheck]:
    XY = module_tensor(X, Y, B)
    YZ = module_tensor(Y, Z, B)
    XY_Z = module_tensor(XY.product, Z, B)
    X_YZ = module_tensor(X, YZ.product, B)
    one_X, one_Z = identity(X.carrier), identity(Z.carrier)
    alpha = associator(X, Y, Z, B)
    alpha_inv = associator_inverse(X, Y, Z, B)
    out = [
        check_equal("associator_left_inverse", alpha_inv @ alpha,
                    identity(XY_Z.product.carrier), where),
        check_equal("associator_right_inverse", alpha @ alpha_inv,
                    identity(X_YZ.product.carrier), where),
        check_equal("associator_B_linear", alpha @ XY_Z.product.action,
                    X_YZ.product.action @ tensor(alpha, B.one), where),
        check_equal(
            "inclusions_compatible",
            chain(alpha, X_YZ.i, tensor(one_X, YZ.i)),
            chain(XY_Z.i, tensor(XY.i, one_Z)),
            where,
        ),
        check_equal(
            "projections_compatible",
            chain(tensor(XY.p, one_Z), XY_Z.p, alpha),
            chain(tensor(one_X, YZ.p), X_YZ.p),
            where,
        ),
        check_equal(
            "frobenius_square_left",
            chain(tensor(one_X, YZ.i), tensor(XY.p, one_Z)),
            chain(X_YZ.p, alpha_inv, XY_Z.i),
            where,
        ),
        check_equal(
            "frobenius_square_right",
            chain(tensor(XY.i, one_Z), tensor(one_X, YZ.p)),
            chain(XY_Z.p, alpha, X_YZ.i),
            where,
        ),
        check_equal("triple_idempotent_bracketing", E3(X, Y, Z, B), E3(X, Y, Z, B, left_first=False),
                    where),
    ]
    return out


def _triangle_check(X: RightModule, Y: RightModule, B: WeakBimonoid, where: str) -> AxiomCheck:
    R = base_monoid(B).module
    XR = module_tensor(X, R, B)
    RY = module_tensor(R, Y, B)
    XR_Y = module_tensor(XR.product, Y, B)
    X_RY = module_tensor(X, RY.product, B)
    XY = module_tensor(X, Y, B)
    rho = unit_constraints(X, B).rho
    lam = unit_constraints(Y, B).lam
    lhs = box_map(rho, identity(Y.carrier), XR_Y, XY)
    rhs = box_map(identity(X.carrier), lam, X_RY, XY) @ associator(X, R, Y, B)
    return check_equal("triangle", lhs, rhs, where)


def _pentagon_check(W: RightModule, X: RightModule, Y: RightModule, Z: RightModule,
                    B: WeakBimonoid, where: str) -> AxiomCheck:
    WX = box(W, X, B)
    XY = box(X, Y, B)
    YZ = box(Y, Z, B)
    WX_Y = box(WX, Y, B)
    W_XY = box(W, XY, B)
    XY_Z = box(XY, Z, B)
    X_YZ = box(X, YZ, B)
    one = identity
    lhs = associator(W, X, YZ, B) @ associator(WX, Y, Z, B)
    a1 = box_map(associator(W, X, Y, B), one(Z.carrier),
                 module_tensor(WX_Y, Z, B), module_tensor(W_XY, Z, B))
    a2 = associator(W, XY, Z, B)
    a3 = box_map(one(W.carrier), associator(X, Y, Z, B),
                 module_tensor(W, XY_Z, B), module_tensor(W, X_YZ, B))
    return check_equal("pentagon", lhs, chain(a1, a2, a3), where)


def coherence_check(
    modules: Mapping[str, RightModule] | Sequence[RightModule],
    B: WeakBimonoid,
    *,
    pentagon_tuples: Sequence[tuple[int, int, int, int]] | None = None,
    strict: bool = True,
) -> AxiomReport:
    """Monoidal coherence of the truncated product on the given modules.

    Checks the splitting identities on every pair, associator properties and
    both Frobenius squares on every triple, the triangle on every pair and the
    pentagon on every 4-tuple (or on ``pentagon_tuples`` if given, as index
    tuples). With ``strict`` a failure raises :class:`CoherenceFailed`.
    """
    _require_symmetric(B)
    if isinstance(modules, Mapping):
        names = list(modules)
        mods = [modules[k] for k in names]
    else:
        mods = list(modules)
        names = [f"M{k}" for k in range(len(mods))]
    idx = range(len(mods))
    checks: list[AxiomCheck] = []
    for k, m in enumerate(mods):
        where = _label(names, k)
        try:
            unit_constraints(m, B)
            checks.append(AxiomCheck("unit_constraints_invertible", True, None, where))
        except ConstraintNotInvertible:
            checks.append(AxiomCheck("unit_constraints_invertible", False, None, where))
    for x, y in product(idx, repeat=2):
        where = _label(names, x, y)
        checks.extend(_pair_checks(mods[x], mods[y], B, where))
        checks.append(_triangle_check(mods[x], mods[y], B, where))
    for x, y, z in product(idx, repeat=3):
        checks.extend(_triple_checks(mods[x], mods[y], mods[z], B, _label(names, x, y, z)))
    tuples = product(idx, repeat=4) if pentagon_tuples is None else pentagon_tuples
    for w, x, y, z in tuples:
        checks.append(_pentagon_check(mods[w], mods[x], mods[y], mods[z], B,
                                      _label(names, w, x, y, z)))
    report = AxiomReport("monoidal coherence of module products", tuple(checks))
    if strict and not report.ok:
        bad = report.failures()[0]
        raise CoherenceFailed(f"{bad.name} fails at {bad.where}", report)
    return report


# -- R-bimodule structure ---------------------------------------------------


@dataclass(frozen=True)
class RBimodule:
    full: LinMap
    left: LinMap
    right: LinMap


def r_bimodule(A: RightModule, B: WeakBimonoid) -> RBimodule:
    """The ``R``-bimodule underlying a right ``B``-module, with its laws verified."""
    R = base_monoid(B)
    Rm = R.module
    k, one_A = R.R_dim, identity(A.carrier)
    one_R = identity(k)
    e3 = E3(Rm, A, Rm, B)
    full = chain(e3, tensor(R.I, one_A, R.I), tensor(B.eps, one_A, B.eps))
    left = full @ tensor(one_R, one_A, R.eta_R)
    right = full @ tensor(R.eta_R, one_A, one_R)
    problems = []
    if left @ tensor(R.mu_R, one_A) != left @ tensor(one_R, left):
        problems.append("left action associativity")
    if left @ tensor(R.eta_R, one_A) != one_A:
        problems.append("left action unit")
    if right @ tensor(one_A, R.mu_R) != right @ tensor(right, one_R):
        problems.append("right action associativity")
    if right @ tensor(one_A, R.eta_R) != one_A:
        problems.append("right action unit")
    if full != right @ tensor(left, one_R) or full != left @ tensor(one_R, right):
        problems.append("factorization through left and right actions")
    if problems:
        raise BimoduleLawFailed("; ".join(problems))
    return RBimodule(full, left, right)


def r_bimodule_actions(A: RightModule, B: WeakBimonoid) -> LinMap:
    """``R (x) A (x) R -> A``."""
    return r_bimodule(A, B).full
