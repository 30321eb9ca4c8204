"""Weak bimonoids, their axiom suite and the induced monad ``T = - (x) B``.

Objects of the ground category are plain dimensions. ``T`` sends ``X`` to
``X * dim(B)``; the structure maps of ``T`` are built from those of ``B`` and
the braiding ``c_{Y,B}``. For a user-supplied braid only ``c_{B,B}`` is known,
so operations that need ``c_{Y,B}`` for an arbitrary ``Y`` raise
:class:`BraidingError` unless ``Y`` is the unit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .lincore import (
    AlgebraError,
    DimensionMismatch,
    LinMap,
    chain,
    identity,
    inverse,
    is_invertible,
    swap,
    tensor,
)


class IdempotencyFailed(AlgebraError):
    pass


class NotAMorphism(AlgebraError):
    pass


class BraidingError(AlgebraError):
    pass


# -- reports ----------------------------------------------------------------


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    holds: bool
    witness: tuple[LinMap, LinMap] | None = None
    where: str = ""


def check_equal(name: str, lhs: LinMap, rhs: LinMap, where: str = "") -> AxiomCheck:
    """Compare two composites; keep both as a witness when they differ."""
    if lhs == rhs:
        return AxiomCheck(name, True, None, where)
    return AxiomCheck(name, False, (lhs, rhs), where)


@dataclass(frozen=True)
class AxiomReport:
    title: str
    checks: tuple[AxiomCheck, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks)

    def __bool__(self) -> bool:
        return self.ok

    def __iter__(self):
        return iter(self.checks)

    def __len__(self) -> int:
        return len(self.checks)

    @property
    def names(self) -> list[str]:
        seen: dict[str, None] = {}
        for c in self.checks:
            seen.setdefault(c.name, None)
        return list(seen)

    def holds(self, name: str) -> bool:
        """True iff every instance of the named check holds."""
        found = [c for c in self.checks if c.name == name]
        if not found:
            raise KeyError(name)
        return all(c.holds for c in found)

    def failures(self) -> list[AxiomCheck]:
        return [c for c in self.checks if not c.holds]

    def verdicts(self) -> dict[str, bool]:
        return {n: self.holds(n) for n in self.names}

    def extend(self, other: Iterable[AxiomCheck], title: str | None = None) -> AxiomReport:
        return AxiomReport(title or self.title, self.checks + tuple(other))


# -- the data type ----------------------------------------------------------


@dataclass(frozen=True)
class WeakBimonoid:
    """A vector space ``B`` with multiplication, unit, comultiplication, counit.

    ``braid`` is an optional Yang-Baxter operator on ``B (x) B`` standing in
    for ``c_{B,B}``; ``None`` means the symmetric swap. The monoid, comonoid
    and weak compatibility laws are not enforced here; see
    :func:`validate_monoid_comonoid` and :func:`check_weak_bimonoid`.
    """

    dim: int
    mu: LinMap
    eta: LinMap
    delta: LinMap
    eps: LinMap
    braid: LinMap | None = None

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise DimensionMismatch("a weak bimonoid needs positive dimension")
        expected = {
            "mu": (n, n * n),
            "eta": (n, 1),
            "delta": (n * n, n),
            "eps": (1, n),
        }
        for name, shape in expected.items():
            got = getattr(self, name).shape
            if got != shape:
                raise DimensionMismatch(f"{name} has shape {got}, expected {shape}")
        if self.braid is not None:
            c = self.braid
            if c.shape != (n * n, n * n):
                raise DimensionMismatch(f"braid has shape {c.shape}, expected {(n * n, n * n)}")
            if c == swap(n, n):
                object.__setattr__(self, "braid", None)
                return
            if not is_invertible(c):
                raise BraidingError("braid is not invertible")
            one = identity(n)
            left = chain(tensor(c, one), tensor(one, c), tensor(c, one))
            right = chain(tensor(one, c), tensor(c, one), tensor(one, c))
            if left != right:
                raise BraidingError("braid violates the Yang-Baxter equation")

    @property
    def symmetric(self) -> bool:
        return self.braid is None

    @cached_property
    def c(self) -> LinMap:
        return swap(self.dim, self.dim) if self.braid is None else self.braid

    @cached_property
    def c_inv(self) -> LinMap:
        return swap(self.dim, self.dim) if self.braid is None else inverse(self.braid)

    @cached_property
    def monad(self) -> InducedMonad:
        return InducedMonad(self)

    @property
    def one(self) -> LinMap:
        return identity(self.dim)

    def replace(self, **changes) -> WeakBimonoid:
        data = dict(dim=self.dim, mu=self.mu, eta=self.eta, delta=self.delta,
                    eps=self.eps, braid=self.braid)
        data.update(changes)
        return WeakBimonoid(**data)


# -- B-level axioms ---------------------------------------------------------


def validate_monoid_comonoid(B: WeakBimonoid) -> AxiomReport:
    one = B.one
    mu, eta, delta, eps = B.mu, B.eta, B.delta, B.eps
    checks = [
        check_equal("mu_associative", mu @ tensor(mu, one), mu @ tensor(one, mu)),
        check_equal("mu_left_unit", mu @ tensor(eta, one), one),
        check_equal("mu_right_unit", mu @ tensor(one, eta), one),
        check_equal("delta_coassociative", tensor(delta, one) @ delta, tensor(one, delta) @ delta),
        check_equal("delta_left_counit", tensor(eps, one) @ delta, one),
        check_equal("delta_right_counit", tensor(one, eps) @ delta, one),
    ]
    return AxiomReport("monoid and comonoid laws", tuple(checks))


def weak_compatibility_checks(B: WeakBimonoid) -> list[AxiomCheck]:
    """The compatibility diagrams between the monoid and comonoid structures."""
    one = B.one
    mu, eta, delta, eps = B.mu, B.eta, B.delta, B.eps
    c, ci = B.c, B.c_inv

    def exchange(cross: LinMap | None) -> tuple[LinMap, LinMap]:
        if cross is None:
            lhs = chain(tensor(one, delta), tensor(mu, one), tensor(eps, one))
            rhs = chain(tensor(one, eta, one), tensor(one, delta, one),
                        tensor(mu, mu), tensor(eps, one))
        else:
            lhs = chain(tensor(one, delta), tensor(one, cross), tensor(mu, one), tensor(eps, one))
            rhs = chain(tensor(one, eta, one), tensor(one, delta, one),
                        tensor(one, cross, one), tensor(mu, mu), tensor(eps, one))
        return lhs, rhs

    def unit_split(cross: LinMap | None) -> tuple[LinMap, LinMap]:
        lhs = chain(eta, delta, tensor(delta, one))
        steps = [tensor(eta, eta), tensor(delta, delta)]
        if cross is not None:
            steps.append(tensor(one, cross, one))
        steps.append(tensor(one, mu, one))
        return lhs, chain(*steps)

    def counit_split(cross: LinMap | None) -> tuple[LinMap, LinMap]:
        lhs = chain(tensor(mu, one), mu, eps)
        steps = [tensor(one, delta, one)]
        if cross is not None:
            steps.append(tensor(one, cross, one))
        steps += [tensor(mu, mu), tensor(eps, eps)]
        return lhs, chain(*steps)

    return [
        check_equal("unit_counit_exchange_braided", *exchange(ci)),
        check_equal("unit_counit_exchange", *exchange(None)),
        check_equal("unit_weak_comultiplicative_braided", *unit_split(ci)),
        check_equal("unit_weak_comultiplicative", *unit_split(None)),
        check_equal(
            "comultiplication_multiplicative",
            delta @ mu,
            chain(tensor(delta, delta), tensor(one, c, one), tensor(mu, mu)),
        ),
        check_equal("counit_weak_multiplicative_braided", *counit_split(ci)),
        check_equal("counit_weak_multiplicative", *counit_split(None)),
    ]


def check_weak_bimonoid(B: WeakBimonoid) -> AxiomReport:
    """Monoid, comonoid and weak compatibility laws, each with a witness on failure."""
    base = validate_monoid_comonoid(B)
    return AxiomReport("weak bimonoid axioms", base.checks + tuple(weak_compatibility_checks(B)))


def is_weak_bimonoid(B: WeakBimonoid) -> bool:
    return check_weak_bimonoid(B).ok


# Each compatibility diagram above is the K-component of one of the
# conditions on T = - (x) B checked by check_tau_axioms.
TAU_COUNTERPART = {
    "mu_associative": "monad_associative",
    "mu_left_unit": "monad_unit_inner",
    "mu_right_unit": "monad_unit_outer",
    "delta_coassociative": "opmonoidal_coassociative",
    "delta_left_counit": "opmonoidal_counit_left",
    "delta_right_counit": "opmonoidal_counit_right",
    "unit_counit_exchange_braided": "right_unit_2cell",
    "unit_counit_exchange": "left_unit_2cell",
    "unit_weak_comultiplicative_braided": "frobenius_left",
    "unit_weak_comultiplicative": "frobenius_right",
    "comultiplication_multiplicative": "tau_multiplicative",
}


# -- the induced monad ------------------------------------------------------


class InducedMonad:
    """The monad ``X |-> X (x) B`` with its opmonoidal structure ``(tau, tau0)``."""

    def __init__(self, B: WeakBimonoid):
        self.B = B
        self.n = B.dim

    def T(self, X: int) -> int:
        return X * self.n

    def Tf(self, f: LinMap) -> LinMap:
        return tensor(f, self.B.one)

    def m(self, X: int) -> LinMap:
        return tensor(identity(X), self.B.mu)

    def u(self, X: int) -> LinMap:
        return tensor(identity(X), self.B.eta)

    def braid_with_B(self, Y: int) -> LinMap:
        """``c_{Y,B}`` for a plain object ``Y``."""
        if Y == 1:
            return identity(self.n)
        if not self.B.symmetric:
            raise BraidingError(
                "a custom braid only determines c_{B,B}; module-level maps need the symmetric swap"
            )
        return swap(Y, self.n)

    def tau(self, X: int, Y: int, c_YB: LinMap | None = None) -> LinMap:
        """``tau_{X,Y} : T(X (x) Y) -> TX (x) TY``; pass ``c_YB`` to override the braiding."""
        if c_YB is None:
            c_YB = self.braid_with_B(Y)
        n = self.n
        return tensor(identity(X), c_YB, identity(n)) @ tensor(identity(X * Y), self.B.delta)

    @property
    def tau0(self) -> LinMap:
        return self.B.eps

    def tau3(self, X: int, Y: int, Z: int) -> LinMap:
        return tensor(self.tau(X, Y), identity(self.T(Z))) @ self.tau(X * Y, Z)

    def E_free(self, X: int, Y: int) -> LinMap:
        """``E_{TX,TY}`` for the free algebras ``(TX, m_X)`` and ``(TY, m_Y)``."""
        TX, TY = self.T(X), self.T(Y)
        return chain(self.u(TX * TY), self.tau(TX, TY), tensor(self.m(X), self.m(Y)))

    def E3_free(self, X: int, Y: int, Z: int) -> LinMap:
        TX, TY, TZ = self.T(X), self.T(Y), self.T(Z)
        return chain(
            self.u(TX * TY * TZ),
            self.tau3(TX, TY, TZ),
            tensor(self.m(X), self.m(Y), self.m(Z)),
        )


def tau(B: WeakBimonoid, X: int, Y: int) -> LinMap:
    return B.monad.tau(X, Y)


def tau0(B: WeakBimonoid) -> LinMap:
    return B.eps


def t_map(B: WeakBimonoid) -> LinMap:
    """``(B (x) eps)(B (x) mu)(c (x) B)(B (x) delta)(B (x) eta)``."""
    one = B.one
    return chain(tensor(one, B.eta), tensor(one, B.delta), tensor(B.c, one),
                 tensor(one, B.mu), tensor(one, B.eps))


def sqcap_generic(B: WeakBimonoid) -> LinMap:
    """``(TK (x) tau0)(TK (x) m_K) tau_{K,TK} u_{TK}`` with ``TK = B``."""
    M = B.monad
    TK = M.T(1)
    return chain(
        M.u(TK),
        M.tau(1, TK, c_YB=B.c),
        tensor(identity(TK), M.m(1)),
        tensor(identity(TK), M.tau0),
    )


def sqcap_checks(B: WeakBimonoid) -> list[AxiomCheck]:
    p = sqcap_generic(B)
    mK = B.mu
    return [
        check_equal("sqcap_idempotent", p @ p, p),
        check_equal("sqcap_absorbs_multiplication", chain(tensor(p, B.one), mK, p), p @ mK),
        check_equal("sqcap_equals_t", p, t_map(B)),
    ]


def sqcap(B: WeakBimonoid) -> LinMap:
    """The idempotent on ``TK = B`` whose image is the base monoid."""
    for chk in sqcap_checks(B):
        if not chk.holds:
            raise IdempotencyFailed(f"{chk.name} fails")
    return sqcap_generic(B)


def _tau_checks_at(M: InducedMonad, X: int, Y: int, Z: int) -> list[AxiomCheck]:
    idn = identity
    TK = M.T(1)
    TX, TY, TZ = M.T(X), M.T(Y), M.T(Z)
    where = f"X={X},Y={Y},Z={Z}"
    out: list[AxiomCheck] = []

    # monad and opmonoidal functor laws
    out.append(check_equal("monad_associative", M.m(X) @ M.Tf(M.m(X)), M.m(X) @ M.m(TX), where))
    out.append(check_equal("monad_unit_inner", M.m(X) @ M.Tf(M.u(X)), idn(TX), where))
    out.append(check_equal("monad_unit_outer", M.m(X) @ M.u(TX), idn(TX), where))
    out.append(check_equal(
        "opmonoidal_coassociative",
        tensor(M.tau(X, Y), idn(TZ)) @ M.tau(X * Y, Z),
        tensor(idn(TX), M.tau(Y, Z)) @ M.tau(X, Y * Z),
        where,
    ))
    out.append(check_equal(
        "opmonoidal_counit_left", tensor(M.tau0, idn(TX)) @ M.tau(1, X), idn(TX), where))
    out.append(check_equal(
        "opmonoidal_counit_right", tensor(idn(TX), M.tau0) @ M.tau(X, 1), idn(TX), where))

    # unit 2-cells
    top = chain(
        M.Tf(M.u(X * TK)),
        M.Tf(M.tau(X, TK)),
        M.Tf(tensor(idn(TX), M.m(1))),
        M.Tf(tensor(idn(TX), M.tau0)),
        M.m(X),
    )
    bottom = chain(M.tau(X, TK), tensor(idn(TX), M.m(1)), tensor(idn(TX), M.tau0))
    out.append(check_equal("right_unit_2cell", top, bottom, where))

    top = chain(
        M.Tf(M.u(TK * X)),
        M.Tf(M.tau(TK, X)),
        M.Tf(tensor(M.m(1), idn(TX))),
        M.Tf(tensor(M.tau0, idn(TX))),
        M.m(X),
    )
    bottom = chain(M.tau(TK, X), tensor(M.m(1), idn(TX)), tensor(M.tau0, idn(TX)))
    out.append(check_equal("left_unit_2cell", top, bottom, where))

    # Frobenius-type conditions on three objects
    bottom = chain(M.u(X * Y * Z), M.tau(X * Y, Z), tensor(M.tau(X, Y), idn(TZ)))
    top = chain(
        tensor(idn(X), M.u(Y * Z)),
        tensor(idn(X), M.tau(Y, Z)),
        tensor(M.u(X * TY), idn(TZ)),
        tensor(M.tau(X, TY), idn(TZ)),
        tensor(idn(TX), M.m(Y), idn(TZ)),
    )
    out.append(check_equal("frobenius_left", top, bottom, where))
    top = chain(
        tensor(M.u(X * Y), idn(Z)),
        tensor(M.tau(X, Y), idn(Z)),
        tensor(idn(TX), M.u(TY * Z)),
        tensor(idn(TX), M.tau(TY, Z)),
        tensor(idn(TX), M.m(Y), idn(TZ)),
    )
    out.append(check_equal("frobenius_right", top, bottom, where))

    # tau is a morphism of monads
    out.append(check_equal(
        "tau_multiplicative",
        M.tau(X, Y) @ M.m(X * Y),
        chain(M.Tf(M.tau(X, Y)), M.tau(TX, TY), tensor(M.m(X), M.m(Y))),
        where,
    ))
    return out


def _triple_idempotent_checks(M: InducedMonad, X: int, Y: int, Z: int) -> list[AxiomCheck]:
    TX, TY, TZ = M.T(X), M.T(Y), M.T(Z)
    where = f"X={X},Y={Y},Z={Z}"
    e_xy = tensor(M.E_free(X, Y), identity(TZ))
    e_yz = tensor(identity(TX), M.E_free(Y, Z))
    e3 = M.E3_free(X, Y, Z)
    return [
        check_equal("triple_idempotent_left", e_yz @ e_xy, e3, where),
        check_equal("triple_idempotent_right", e_xy @ e_yz, e3, where),
    ]


def check_tau_axioms(
    B: WeakBimonoid, dims: Sequence[int] = (1, 2), *, triple_idempotents: bool = True
) -> AxiomReport:
    """Conditions on ``T = - (x) B`` over every triple drawn from ``dims``.

    The triple-idempotent square is the most expensive check (it lives on
    ``dim(B)**6 * X*Y*Z`` basis vectors before truncation) and can be skipped.
    """
    if not B.symmetric:
        raise BraidingError("the tau-level suite needs c_{Y,B} for arbitrary Y")
    M = B.monad
    dims = sorted(set(dims))
    checks: list[AxiomCheck] = []
    for X in dims:
        for Y in dims:
            for Z in dims:
                checks.extend(_tau_checks_at(M, X, Y, Z))
    p = sqcap_generic(B)
    checks.append(check_equal(
        "sqcap_absorbs_multiplication", chain(tensor(p, B.one), B.mu, p), p @ B.mu))
    if triple_idempotents:
        for X in dims:
            for Y in dims:
                for Z in dims:
                    checks.extend(_triple_idempotent_checks(M, X, Y, Z))
    return AxiomReport("weak bimonad conditions on - (x) B", tuple(checks))


# -- morphisms --------------------------------------------------------------


def check_morphism(g: LinMap, B: WeakBimonoid, B2: WeakBimonoid) -> AxiomReport:
    """Whether ``g (x) -`` is a morphism of the induced weak bimonads.

    For ``T = - (x) B`` this amounts to ``g`` preserving multiplication, unit,
    comultiplication and counit.
    """
    if g.shape != (B2.dim, B.dim):
        raise DimensionMismatch(f"g has shape {g.shape}, expected {(B2.dim, B.dim)}")
    checks = (
        check_equal("preserves_multiplication", g @ B.mu, B2.mu @ tensor(g, g)),
        check_equal("preserves_unit", g @ B.eta, B2.eta),
        check_equal("preserves_comultiplication", B2.delta @ g, tensor(g, g) @ B.delta),
        check_equal("preserves_counit", B2.eps @ g, B.eps),
    )
    return AxiomReport("weak bimonad morphism", checks)


def base_iso(g: LinMap, B: WeakBimonoid, B2: WeakBimonoid) -> LinMap:
    """``P' g I``: the induced isomorphism between the base monoids."""
    from .emcat import base_monoid

    rep = check_morphism(g, B, B2)
    if not rep.ok:
        names = ", ".join(c.name for c in rep.failures())
        raise NotAMorphism(f"not a morphism of weak bimonoids: {names}")
    R, R2 = base_monoid(B), base_monoid(B2)
    gamma = chain(R.I, g, R2.P)
    problems = []
    if gamma @ R.mu_R != R2.mu_R @ tensor(gamma, gamma):
        problems.append("multiplication")
    if gamma @ R.eta_R != R2.eta_R:
        problems.append("unit")
    if R2.delta_R @ gamma != tensor(gamma, gamma) @ R.delta_R:
        problems.append("comultiplication")
    if R2.eps_R @ gamma != R.eps_R:
        problems.append("counit")
    if not is_invertible(gamma):
        problems.append("invertibility")
    if problems:
        raise NotAMorphism("induced base map fails: " + ", ".join(problems))
    return gamma
