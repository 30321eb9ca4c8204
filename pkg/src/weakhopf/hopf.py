"""Canonical maps, antipodes and weak Hopf witnesses for ``T = - (x) B``.

Maps on ``T(TX (x) Y) = X (x) B (x) Y (x) B`` are obtained from their
``X = Y = K`` components by conjugating with ``c_{Y,B}``; ``conjugate`` does
that once for all of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .lincore import (
    AlgebraError,
    LinMap,
    NoSolution,
    chain,
    identity,
    inverse,
    is_invertible,
    linear_operator,
    rank,
    solve_linear,
    swap,
    tensor,
    zero,
)
from .wbm import (
    AxiomCheck,
    AxiomReport,
    BraidingError,
    IdempotencyFailed,
    WeakBimonoid,
    check_equal,
    t_map,
)


class WhmVerificationFailed(AlgebraError):
    def __init__(self, message: str, report: AxiomReport | None = None):
        super().__init__(message)
        self.report = report


def _c_YB(B: WeakBimonoid, Y: int) -> tuple[LinMap, LinMap]:
    """``c_{Y,B}`` and its inverse for a plain object ``Y``."""
    if Y == 1:
        one = identity(B.dim)
        return one, one
    if not B.symmetric:
        raise BraidingError("a custom braid only determines c_{B,B}; use X = Y = 1")
    return swap(Y, B.dim), swap(B.dim, Y)


def conjugate(B: WeakBimonoid, f_KK: LinMap, X: int, Y: int) -> LinMap:
    """``(X (x) c_{Y,B} (x) B)(X (x) Y (x) f)(X (x) c^{-1}_{Y,B} (x) B)`` for ``f`` on ``B (x) B``."""
    c, c_inv = _c_YB(B, Y)
    one_X, one_B = identity(X), B.one
    return chain(
        tensor(one_X, c_inv, one_B),
        tensor(one_X, identity(Y), f_KK),
        tensor(one_X, c, one_B),
    )


# -- canonical maps ---------------------------------------------------------


def fusion(B: WeakBimonoid, X: int = 1) -> LinMap:
    """``gamma_X = (m_X (x) B)(TX (x) delta)`` on ``X (x) B (x) B``."""
    M = B.monad
    gamma = tensor(M.m(X), B.one) @ tensor(identity(M.T(X)), B.delta)
    if canonical_map(B, X, 1) != gamma:
        raise AlgebraError("canonical map at Y = K differs from the fusion operator")
    return gamma


def canonical_map(B: WeakBimonoid, X: int = 1, Y: int = 1) -> LinMap:
    """``can_{X,Y} = (m_X (x) TY) tau_{TX,Y}``, cross-checked against the fused form."""
    M = B.monad
    c, _ = _c_YB(B, Y)
    can = tensor(M.m(X), identity(M.T(Y))) @ M.tau(M.T(X), Y, c_YB=c)
    gamma_K = tensor(B.mu, B.one) @ tensor(B.one, B.delta)
    if can != conjugate(B, gamma_K, X, Y):
        raise AlgebraError("canonical map disagrees with the conjugated fusion operator")
    return can


def left_canonical_map(B: WeakBimonoid, X: int = 1, Y: int = 1) -> LinMap:
    """``(TX (x) m_Y) tau_{X,TY} : T(X (x) TY) -> TX (x) TY``."""
    M = B.monad
    if B.symmetric:
        c = swap(M.T(Y), B.dim)
    elif Y == 1:
        c = B.c
    else:
        raise BraidingError("a custom braid only determines c_{B,B}; use Y = 1")
    return tensor(identity(M.T(X)), M.m(Y)) @ M.tau(X, M.T(Y), c_YB=c)


# -- idempotents ------------------------------------------------------------


def F_KK(B: WeakBimonoid) -> LinMap:
    one = B.one
    return chain(
        tensor(one, B.eta, one),
        tensor(one, B.delta, B.delta),
        tensor(one, B.c_inv, one, one),
        tensor(B.mu, B.mu, one),
        tensor(one, B.eps, one),
    )


def E_TKTK(B: WeakBimonoid) -> LinMap:
    one = B.one
    return chain(
        tensor(one, one, B.eta),
        tensor(one, one, B.delta),
        tensor(one, B.c, one),
        tensor(B.mu, B.mu),
    )


def idempotent_F(B: WeakBimonoid, X: int = 1, Y: int = 1) -> LinMap:
    F = conjugate(B, F_KK(B), X, Y)
    if F @ F != F:
        raise IdempotencyFailed(f"F is not idempotent at X={X}, Y={Y}")
    return F


def idempotent_E_T(B: WeakBimonoid, X: int = 1, Y: int = 1) -> LinMap:
    """``E_{TX,TY}``, computed for free modules and by conjugation, which must agree."""
    M = B.monad
    TX, TY = M.T(X), M.T(Y)
    c = swap(TY, B.dim) if B.symmetric else (B.c if Y == 1 else None)
    if c is None:
        raise BraidingError("a custom braid only determines c_{B,B}; use Y = 1")
    generic = chain(M.u(TX * TY), M.tau(TX, TY, c_YB=c), tensor(M.m(X), M.m(Y)))
    E = conjugate(B, E_TKTK(B), X, Y)
    if generic != E:
        raise IdempotencyFailed(f"the two forms of E_(TX,TY) differ at X={X}, Y={Y}")
    if E @ E != E:
        raise IdempotencyFailed(f"E_(TX,TY) is not idempotent at X={X}, Y={Y}")
    return E


# -- convolution and the structure maps -------------------------------------


def convolve(f: LinMap, g: LinMap, B: WeakBimonoid) -> LinMap:
    return chain(B.delta, tensor(f, g), B.mu)


@dataclass(frozen=True)
class StructureMaps:
    t: LinMap
    r: LinMap
    s: LinMap
    rop: LinMap


def r_map(B: WeakBimonoid) -> LinMap:
    one = B.one
    return chain(tensor(B.eta, one), tensor(B.delta, one), tensor(one, B.c),
                 tensor(B.mu, one), tensor(B.eps, one))


def s_map(B: WeakBimonoid) -> LinMap:
    one = B.one
    return chain(tensor(B.eta, one), tensor(B.delta, one), tensor(one, B.mu), tensor(one, B.eps))


def rop_map(B: WeakBimonoid) -> LinMap:
    one = B.one
    return chain(tensor(one, B.eta), tensor(one, B.delta), tensor(B.mu, one), tensor(B.eps, one))


def structure_maps(B: WeakBimonoid) -> StructureMaps:
    return StructureMaps(t_map(B), r_map(B), s_map(B), rop_map(B))


# -- antipodes --------------------------------------------------------------


def opposite(B: WeakBimonoid) -> WeakBimonoid:
    """Multiplication ``mu c^{-1}`` and braid ``c^{-1}``; the comonoid is unchanged."""
    braid = None if B.symmetric else B.c_inv
    return WeakBimonoid(B.dim, B.mu @ B.c_inv, B.eta, B.delta, B.eps, braid)


def antipode_checks(B: WeakBimonoid, nu: LinMap) -> list[AxiomCheck]:
    S = structure_maps(B)
    one = B.one
    return [
        check_equal("nu_conv_id_is_t", convolve(nu, one, B), S.t),
        check_equal("id_conv_nu_is_r", convolve(one, nu, B), S.r),
        check_equal("nu_conv_r_is_nu", convolve(nu, S.r, B), nu),
        check_equal("t_conv_nu_is_nu", convolve(S.t, nu, B), nu),
    ]


def antipode_identity_checks(B: WeakBimonoid, nu: LinMap) -> list[AxiomCheck]:
    S = structure_maps(B)
    return [
        check_equal("nu_after_s_is_r", nu @ S.s, S.r),
        check_equal("nu_after_rop_is_t", nu @ S.rop, S.t),
        check_equal("s_after_nu_is_t", S.s @ nu, S.t),
        check_equal("rop_after_nu_is_r", S.rop @ nu, S.r),
    ]


def opposite_antipode_checks(B: WeakBimonoid, nu_op: LinMap) -> list[AxiomCheck]:
    """The antipode diagrams of ``B^op``, written with the data of ``B``."""
    S = structure_maps(B)
    one = B.one
    mu_op = B.mu @ B.c_inv
    d2 = tensor(B.delta, one) @ B.delta
    return [
        check_equal("op_left_diagram", chain(B.delta, tensor(nu_op, one), mu_op), S.s),
        check_equal("op_right_diagram", chain(B.delta, tensor(one, nu_op), mu_op), S.rop),
        check_equal("op_sandwich_diagram",
                    chain(d2, tensor(nu_op, one, nu_op), tensor(mu_op, one), mu_op), nu_op),
    ]


def _solve(B: WeakBimonoid):
    n = B.dim
    S = structure_maps(B)
    one = B.one
    constraints = [
        (linear_operator(lambda v: convolve(v, one, B), n, n), S.t),
        (linear_operator(lambda v: convolve(one, v, B), n, n), S.r),
        (linear_operator(lambda v: convolve(v, S.r, B) - v, n, n), zero(n, n)),
        (linear_operator(lambda v: convolve(S.t, v, B) - v, n, n), zero(n, n)),
    ]
    return solve_linear(constraints, n, n)


@dataclass(frozen=True)
class AntipodeResult:
    nu: LinMap | None
    equations_report: AxiomReport
    invertible: bool
    nu_inverse: LinMap | None
    nu_op: LinMap | None
    unique: bool | None = None
    op_unique: bool | None = None

    @property
    def exists(self) -> bool:
        return self.nu is not None


def solve_antipode(B: WeakBimonoid) -> AntipodeResult:
    """Solve the four linear antipode equations, then verify everything that follows."""
    sol = _solve(B)
    op_sol = _solve(opposite(B))
    nu_op = None if isinstance(op_sol, NoSolution) else op_sol.value
    op_unique = None if nu_op is None else op_sol.unique
    if isinstance(sol, NoSolution):
        report = AxiomReport("antipode", (AxiomCheck("antipode_exists", False),))
        return AntipodeResult(None, report, False, None, nu_op, None, op_unique)
    nu = sol.value
    checks = [AxiomCheck("antipode_exists", True)]
    checks += antipode_checks(B, nu)
    checks += antipode_identity_checks(B, nu)
    invertible = is_invertible(nu)
    nu_inv = inverse(nu) if invertible else None
    if nu_inv is not None:
        checks += [AxiomCheck("inverse_" + c.name, c.holds, c.witness)
                   for c in opposite_antipode_checks(B, nu_inv)]
    report = AxiomReport("antipode", tuple(checks))
    return AntipodeResult(nu, report, invertible, nu_inv, nu_op, sol.unique, op_unique)


# -- weak Hopf witnesses ----------------------------------------------------


def chi_KK(B: WeakBimonoid, nu: LinMap) -> LinMap:
    one = B.one
    return chain(tensor(one, B.delta), tensor(one, nu, one), tensor(B.mu, one))


def chi_witness(B: WeakBimonoid, nu: LinMap, X: int = 1, Y: int = 1) -> LinMap:
    """Candidate weak inverse of ``can_{X,Y}`` built from ``nu``."""
    return conjugate(B, chi_KK(B, nu), X, Y)


def verify_whm(
    B: WeakBimonoid, X: int = 1, Y: int = 1, nu: LinMap | None = None, *, strict: bool = True
) -> AxiomReport:
    """``chi E = chi = F chi``, ``chi can = F`` and ``can chi = E`` at ``(X, Y)``."""
    if nu is None:
        nu = solve_antipode(B).nu
        if nu is None:
            if strict:
                raise WhmVerificationFailed("no antipode, so no weak inverse to test")
            return AxiomReport("weak right Hopf", (AxiomCheck("antipode_exists", False),))
    where = f"X={X},Y={Y}"
    can = canonical_map(B, X, Y)
    E = idempotent_E_T(B, X, Y)
    F = idempotent_F(B, X, Y)
    chi = chi_witness(B, nu, X, Y)
    report = AxiomReport("weak right Hopf", (
        check_equal("chi_absorbs_E", chi @ E, chi, where),
        check_equal("chi_absorbs_F", F @ chi, chi, where),
        check_equal("chi_after_can_is_F", chi @ can, F, where),
        check_equal("can_after_chi_is_E", can @ chi, E, where),
        check_equal("can_factors_through_E_and_F", chain(F, can, E), can, where),
    ))
    if strict and not report.ok:
        bad = report.failures()[0]
        raise WhmVerificationFailed(f"{bad.name} fails at {where}", report)
    return report


def is_right_weak_hopf(B: WeakBimonoid, dims: Sequence[int] = (1, 2)) -> bool:
    res = solve_antipode(B)
    if res.nu is None:
        return False
    dims = dims if B.symmetric else (1,)
    return all(verify_whm(B, X, Y, res.nu, strict=False).ok for X in dims for Y in dims)


def check_left_hopf(B: WeakBimonoid) -> AxiomReport:
    """Antipode of ``B^op`` and the invertible-antipode equivalences."""
    res = solve_antipode(B)
    checks = [AxiomCheck("op_antipode_exists", res.nu_op is not None)]
    if res.nu_op is not None:
        checks += opposite_antipode_checks(B, res.nu_op)
    op_invertible = res.nu_op is not None and is_invertible(res.nu_op)
    checks.append(AxiomCheck("invertible_antipode_iff_invertible_op_antipode",
                             res.invertible == op_invertible))
    if res.invertible and res.nu_op is not None:
        checks.append(check_equal("op_antipode_is_inverse", res.nu_op, res.nu_inverse))
    return AxiomReport("left weak Hopf", tuple(checks))


@dataclass(frozen=True)
class HopfVerdicts:
    right_weak_hopf: bool
    left_weak_hopf: bool
    invertible_antipode: bool

    @property
    def coincide(self) -> bool:
        return self.right_weak_hopf == self.left_weak_hopf == self.invertible_antipode


def hopf_verdicts(B: WeakBimonoid, dims: Sequence[int] = (1, 2)) -> HopfVerdicts:
    """Right weak Hopf, left weak Hopf (through ``B^op``) and invertibility of ``nu``."""
    res = solve_antipode(B)
    right = is_right_weak_hopf(B, dims)
    left = res.nu_op is not None and check_left_hopf(B).ok and is_right_weak_hopf(opposite(B), dims)
    return HopfVerdicts(right, left, res.invertible)


def antipode_rank(res: AntipodeResult) -> int | None:
    return None if res.nu is None else rank(res.nu)
