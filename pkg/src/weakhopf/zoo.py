"""Example weak bimonoids with known behaviour.

Groupoid algebras are weak Hopf; monoid algebras are bialgebras that have an
antipode only for groups. Arrows compose diagrammatically: ``g h`` is defined
when ``target(g) == source(h)``, so matrix units satisfy ``f_ij f_jk = f_ik``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence

from .emcat import RightModule, base_monoid, regular_module
from .lincore import AlgebraError, LinMap
from .wbm import WeakBimonoid, check_weak_bimonoid


class InvalidGroupoid(AlgebraError):
    pass


class InvalidMonoid(AlgebraError):
    pass


# -- groupoids --------------------------------------------------------------


@dataclass(frozen=True)
class FiniteGroupoid:
    objects: int
    arrows: tuple[tuple[int, int, str], ...]
    composition: tuple[tuple[tuple[int, int], int], ...]

    def __post_init__(self):
        n = len(self.arrows)
        comp = dict(self.composition)
        src = [a[0] for a in self.arrows]
        tgt = [a[1] for a in self.arrows]
        if any(not (0 <= o < self.objects) for o in src + tgt):
            raise InvalidGroupoid("arrow endpoint outside the object set")
        for g, h in product(range(n), repeat=2):
            if (tgt[g] == src[h]) != ((g, h) in comp):
                raise InvalidGroupoid(f"composite of arrows {g},{h} defined iff composable")
            if (g, h) in comp:
                k = comp[(g, h)]
                if src[k] != src[g] or tgt[k] != tgt[h]:
                    raise InvalidGroupoid(f"composite of {g},{h} has wrong endpoints")
        for g, h, k in product(range(n), repeat=3):
            if (g, h) in comp and (h, k) in comp:
                if comp[(comp[(g, h)], k)] != comp[(g, comp[(h, k)])]:
                    raise InvalidGroupoid(f"composition not associative at {g},{h},{k}")
        ids = self.identities
        for g in range(n):
            if comp[(ids[src[g]], g)] != g or comp[(g, ids[tgt[g]])] != g:
                raise InvalidGroupoid(f"identity law fails at arrow {g}")
        self.inverses  # raises when some arrow is not invertible

    @property
    def size(self) -> int:
        return len(self.arrows)

    def _comp(self) -> dict[tuple[int, int], int]:
        return dict(self.composition)

    @property
    def identities(self) -> list[int]:
        comp = self._comp()
        out = []
        for x in range(self.objects):
            found = [g for g, (s, t, _) in enumerate(self.arrows)
                     if s == t == x and comp[(g, g)] == g]
            if len(found) != 1:
                raise InvalidGroupoid(f"object {x} needs exactly one identity arrow")
            out.append(found[0])
        return out

    @property
    def inverses(self) -> list[int]:
        comp = self._comp()
        ids = self.identities
        out = []
        for g, (s, t, _) in enumerate(self.arrows):
            inv = [h for h in range(self.size)
                   if comp.get((g, h)) == ids[s] and comp.get((h, g)) == ids[t]]
            if not inv:
                raise InvalidGroupoid(f"arrow {g} has no inverse")
            out.append(inv[0])
        return out

    @staticmethod
    def build(objects: int, arrows: Sequence[tuple[int, int, str]],
              compose: Callable[[int, int], int]) -> FiniteGroupoid:
        comp = tuple(((g, h), compose(g, h))
                     for g, h in product(range(len(arrows)), repeat=2)
                     if arrows[g][1] == arrows[h][0])
        return FiniteGroupoid(objects, tuple(arrows), comp)


def discrete_groupoid(k: int) -> FiniteGroupoid:
    arrows = [(x, x, f"1_{x}") for x in range(k)]
    return FiniteGroupoid.build(k, arrows, lambda g, h: g)


def pair_groupoid(k: int) -> FiniteGroupoid:
    """One arrow ``f_ij`` for every ordered pair of objects, ordered row-major."""
    arrows = [(i, j, f"f{i + 1}{j + 1}") for i in range(k) for j in range(k)]
    return FiniteGroupoid.build(k, arrows, lambda g, h: arrows[g][0] * k + arrows[h][1])


def group_groupoid(table: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> FiniteGroupoid:
    """A group as a one-object groupoid; ``table[a][b]`` is the product ``a b``."""
    n = len(table)
    names = names or [f"g{a}" for a in range(n)]
    return FiniteGroupoid.build(1, [(0, 0, names[a]) for a in range(n)],
                                lambda g, h: table[g][h])


def disjoint_union(*parts: FiniteGroupoid) -> FiniteGroupoid:
    arrows: list[tuple[int, int, str]] = []
    comp = []
    obj_off = arr_off = 0
    for G in parts:
        for s, t, lab in G.arrows:
            arrows.append((s + obj_off, t + obj_off, f"{lab}@{obj_off}" if len(parts) > 1 else lab))
        for (g, h), k in G.composition:
            comp.append(((g + arr_off, h + arr_off), k + arr_off))
        obj_off += G.objects
        arr_off += G.size
    return FiniteGroupoid(obj_off, tuple(arrows), tuple(comp))


def groupoid_algebra(G: FiniteGroupoid) -> WeakBimonoid:
    n = G.size
    mu = {}
    for (g, h), k in G.composition:
        mu[(k, g * n + h)] = 1
    eta = {(x, 0): 1 for x in G.identities}
    delta = {(g * n + g, g): 1 for g in range(n)}
    eps = {(0, g): 1 for g in range(n)}
    return WeakBimonoid(n, LinMap(n * n, n, mu), LinMap(1, n, eta),
                        LinMap(n, n * n, delta), LinMap(n, 1, eps))


def inverse_permutation(G: FiniteGroupoid) -> LinMap:
    """The linear map ``g |-> g^{-1}``."""
    n = G.size
    return LinMap(n, n, {(G.inverses[g], g): 1 for g in range(n)})


def right_ideal(G: FiniteGroupoid, obj: int = 0) -> RightModule:
    """``1_obj B``: arrows with source ``obj`` under right multiplication."""
    basis = [g for g, (s, _, _) in enumerate(G.arrows) if s == obj]
    pos = {g: k for k, g in enumerate(basis)}
    n, m = G.size, len(basis)
    action = {}
    for (g, h), k in G.composition:
        if g in pos:
            action[(pos[k], pos[g] * n + h)] = 1
    return RightModule(m, LinMap(m * n, m, action))


# -- monoids ----------------------------------------------------------------


@dataclass(frozen=True)
class FiniteMonoidTable:
    size: int
    table: tuple[tuple[int, ...], ...]
    unit: int
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        n = self.size
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise InvalidMonoid("table must be size x size")
        if any(not (0 <= v < n) for r in self.table for v in r):
            raise InvalidMonoid("table entry outside the carrier")
        if not (0 <= self.unit < n):
            raise InvalidMonoid("unit outside the carrier")
        t = self.table
        for a in range(n):
            if t[self.unit][a] != a or t[a][self.unit] != a:
                raise InvalidMonoid(f"unit law fails at {a}")
        for a, b, c in product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise InvalidMonoid(f"not associative at {a},{b},{c}")

    @property
    def is_group(self) -> bool:
        return all(any(self.table[a][b] == self.unit for b in range(self.size))
                   for a in range(self.size))


def cyclic_group(n: int) -> FiniteMonoidTable:
    names = tuple("1" if k == 0 else ("g" if k == 1 else f"g{k}") for k in range(n))
    return FiniteMonoidTable(n, tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), 0, names)


def monoid_algebra(M: FiniteMonoidTable) -> WeakBimonoid:
    n = M.size
    mu = {(M.table[a][b], a * n + b): 1 for a in range(n) for b in range(n)}
    delta = {(a * n + a, a): 1 for a in range(n)}
    return WeakBimonoid(n, LinMap(n * n, n, mu), LinMap(1, n, {(M.unit, 0): 1}),
                        LinMap(n, n * n, delta), LinMap(n, 1, {(0, a): 1 for a in range(n)}))


def trivial_module(B: WeakBimonoid) -> RightModule:
    """The ground field with ``B`` acting through the counit."""
    return RightModule(1, B.eps)


IDEMPOTENT_MONOID = FiniteMonoidTable(2, ((0, 1), (1, 1)), 0, ("1", "x"))
# x m = x and y m = y for every non-unit m
LEFT_ZERO_MONOID = FiniteMonoidTable(3, ((0, 1, 2), (1, 1, 1), (2, 2, 2)), 0, ("1", "x", "y"))


# -- the corpus -------------------------------------------------------------


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    B: WeakBimonoid
    description: str
    groupoid: FiniteGroupoid | None = None
    monoid: FiniteMonoidTable | None = None
    basis: tuple[str, ...] = ()

    @property
    def has_antipode(self) -> bool:
        if self.groupoid is not None:
            return True
        assert self.monoid is not None
        return self.monoid.is_group

    def modules(self) -> dict[str, RightModule]:
        """Three modules: the regular one, the base object ``R`` and a small third one."""
        out = {"regular": regular_module(self.B), "base": base_monoid(self.B).module}
        if self.groupoid is not None:
            out["ideal0"] = right_ideal(self.groupoid, 0)
        else:
            out["trivial"] = trivial_module(self.B)
        return out


def _from_groupoid(name: str, G: FiniteGroupoid, description: str) -> CorpusEntry:
    return CorpusEntry(name, groupoid_algebra(G), description, groupoid=G,
                       basis=tuple(a[2] for a in G.arrows))


def _from_monoid(name: str, M: FiniteMonoidTable, description: str) -> CorpusEntry:
    names = M.names or tuple(str(k) for k in range(M.size))
    return CorpusEntry(name, monoid_algebra(M), description, monoid=M, basis=names)


def _z2_table():
    return ((0, 1), (1, 0))


def build_corpus() -> dict[str, CorpusEntry]:
    entries = [
        _from_groupoid("trivial", discrete_groupoid(1), "one object, one arrow"),
        _from_groupoid("diagonal2", discrete_groupoid(2), "k x k, two objects and identities only"),
        _from_monoid("z2", cyclic_group(2), "group algebra of Z/2"),
        _from_groupoid("pair2", pair_groupoid(2), "2x2 matrix units, the pair groupoid on two objects"),
        _from_monoid("z3", cyclic_group(3), "group algebra of Z/3"),
        _from_monoid("z4", cyclic_group(4), "group algebra of Z/4"),
        _from_groupoid(
            "z2_z2_groupoid",
            disjoint_union(group_groupoid(_z2_table(), ("1", "g")), group_groupoid(_z2_table(), ("1", "g"))),
            "two objects, each with vertex group Z/2, no arrows between them",
        ),
        _from_monoid("idempotent_monoid", IDEMPOTENT_MONOID, "monoid {1, x} with x x = x"),
        _from_monoid("left_zero_monoid", LEFT_ZERO_MONOID, "monoid {1, x, y} with x m = x, y m = y"),
    ]
    return {e.name: e for e in entries}


CORPUS_NAMES = (
    "trivial", "diagonal2", "z2", "pair2", "z3", "z4",
    "z2_z2_groupoid", "idempotent_monoid", "left_zero_monoid",
)

_CORPUS: dict[str, CorpusEntry] | None = None


def corpus() -> dict[str, CorpusEntry]:
    global _CORPUS
    if _CORPUS is None:
        _CORPUS = build_corpus()
    return _CORPUS


def get(name: str) -> CorpusEntry:
    try:
        return corpus()[name]
    except KeyError:
        raise KeyError(f"unknown corpus algebra {name!r}; choose from {', '.join(CORPUS_NAMES)}")


# -- counterexamples --------------------------------------------------------


def nonassociative_algebra() -> WeakBimonoid:
    """``e e = e f = f f = e, f e = f`` on ``{e, f}``, with a group-like coalgebra.

    ``(f e) f = e`` while ``f (e f) = f``.
    """
    mu = LinMap(4, 2, [[1, 1, 0, 1], [0, 0, 1, 0]])
    B = monoid_algebra(cyclic_group(2))
    return B.replace(mu=mu)


def broken_unit_coproduct() -> WeakBimonoid:
    """``k x k`` with ``delta(e1) = e1 (x) e2``."""
    B = get("diagonal2").B
    return B.replace(delta=LinMap(2, 4, {(1, 0): 1, (3, 1): 1}))


def exterior_algebra() -> WeakBimonoid:
    """``k[x]/(x^2)`` with ``x`` primitive, in super vector spaces.

    The braid is the Koszul sign swap. With it this is a Hopf monoid whose
    antipode sends ``x`` to ``-x``; with the plain swap the comultiplication
    fails to be multiplicative.
    """
    mu = LinMap(4, 2, {(0, 0): 1, (1, 1): 1, (1, 2): 1})
    eta = LinMap(1, 2, {(0, 0): 1})
    delta = LinMap(2, 4, {(0, 0): 1, (1, 1): 1, (2, 1): 1})
    eps = LinMap(2, 1, {(0, 0): 1})
    braid = LinMap(4, 4, {(0, 0): 1, (2, 1): 1, (1, 2): 1, (3, 3): -1})
    return WeakBimonoid(2, mu, eta, delta, eps, braid)


# -- mutation ---------------------------------------------------------------


_TARGET_MAPS = {
    "mu_associative": ("mu",),
    "mu_left_unit": ("mu", "eta"),
    "mu_right_unit": ("mu", "eta"),
    "delta_coassociative": ("delta",),
    "delta_left_counit": ("delta", "eps"),
    "delta_right_counit": ("delta", "eps"),
    "unit_counit_exchange_braided": ("delta", "mu", "eps", "eta"),
    "unit_counit_exchange": ("delta", "mu", "eps", "eta"),
    "unit_weak_comultiplicative_braided": ("delta", "eta", "mu"),
    "unit_weak_comultiplicative": ("delta", "eta", "mu"),
    "comultiplication_multiplicative": ("delta", "mu"),
    "counit_weak_multiplicative_braided": ("eps", "mu", "delta"),
    "counit_weak_multiplicative": ("eps", "mu", "delta"),
}

MUTATION_TARGETS = tuple(_TARGET_MAPS)


def _perturbations(B: WeakBimonoid, names: Sequence[str]):
    for name in names:
        f: LinMap = getattr(B, name)
        dense = f.dense()
        for i, j in product(range(f.cod), range(f.dom)):
            v = dense[i][j]
            for new in (v + 1, 0):
                if new == v:
                    continue
                entries = [row[:] for row in dense]
                entries[i][j] = new
                yield B.replace(**{name: LinMap(f.dom, f.cod, entries)})


def mutate(B: WeakBimonoid, which: str) -> WeakBimonoid:
    """Change one structure entry so that the named law fails.

    Candidates are tried in a fixed order (maps relevant to the law, entries
    row-major, new value ``old + 1`` then ``0``). If no single-entry change
    breaks the named law, the first change that breaks any law is returned.
    """
    if which not in _TARGET_MAPS:
        raise KeyError(f"unknown law {which!r}; choose from {', '.join(MUTATION_TARGETS)}")
    fallback = None
    for cand in _perturbations(B, _TARGET_MAPS[which]):
        rep = check_weak_bimonoid(cand)
        if not rep.holds(which):
            return cand
        if fallback is None and not rep.ok:
            fallback = cand
    if fallback is None:
        for cand in _perturbations(B, ("mu", "eta", "delta", "eps")):
            if not check_weak_bimonoid(cand).ok:
                return cand
        raise AlgebraError("no single-entry change breaks any law")
    return fallback


__all__ = [
    "CORPUS_NAMES", "CorpusEntry", "FiniteGroupoid", "FiniteMonoidTable", "InvalidGroupoid",
    "InvalidMonoid", "MUTATION_TARGETS", "broken_unit_coproduct", "corpus", "cyclic_group",
    "discrete_groupoid", "disjoint_union", "exterior_algebra", "get", "group_groupoid",
    "groupoid_algebra", "inverse_permutation", "monoid_algebra", "mutate", "nonassociative_algebra",
    "pair_groupoid", "right_ideal", "trivial_module",
]
