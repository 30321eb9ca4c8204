"""Exact linear maps between finite-dimensional rational vector spaces.

A :class:`LinMap` is a ``cod x dom`` matrix with rational entries. Tensor
products use the Kronecker convention with the left factor most significant:
basis vector ``(i, j)`` of ``X (x) Y`` has index ``i * dim(Y) + j``.

Storage is sparse (one ``{column: value}`` dict per row) because the composites
evaluated elsewhere in the package live on spaces of dimension up to
``dim(B) ** 5`` while being mostly permutations and identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


class AlgebraError(Exception):
    """Base class for errors raised by this package."""


class DimensionMismatch(AlgebraError, ValueError):
    pass


class NotSquare(AlgebraError, ValueError):
    pass


class NotIdempotent(AlgebraError, ValueError):
    pass


class NotInvertible(AlgebraError, ValueError):
    pass


def _canon(v: Scalar) -> Scalar:
    # integers stay Python ints; arithmetic on them is much faster
    if type(v) is Fraction and v.denominator == 1:
        return v.numerator
    return v


def as_scalar(v) -> Scalar:
    """Coerce ints, Fractions and ``"p/q"`` strings to an exact scalar."""
    if isinstance(v, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return _canon(v)
    if isinstance(v, str):
        return _canon(Fraction(v.strip()))
    if isinstance(v, Rational):
        return _canon(Fraction(v.numerator, v.denominator))
    raise TypeError(f"cannot use {type(v).__name__} as an exact scalar")


def _div(a: Scalar, b: Scalar) -> Scalar:
    if type(a) is int and type(b) is int:
        return _canon(Fraction(a, b))
    return _canon(Fraction(a) / b)


class LinMap:
    """An immutable exact matrix with explicit source and target dimensions."""

    __slots__ = ("dom", "cod", "_rows", "_hash")

    def __init__(self, dom: int, cod: int, entries=None):
        if dom < 0 or cod < 0:
            raise DimensionMismatch("dimensions must be nonnegative")
        rows: list[dict[int, Scalar]] = [{} for _ in range(cod)]
        if entries is None:
            pass
        elif isinstance(entries, Mapping):
            for (i, j), v in entries.items():
                if not (0 <= i < cod and 0 <= j < dom):
                    raise DimensionMismatch(f"entry ({i}, {j}) outside {cod}x{dom}")
                v = as_scalar(v)
                if v:
                    rows[i][j] = v
        else:
            entries = list(entries)
            if len(entries) != cod:
                raise DimensionMismatch(f"expected {cod} rows, got {len(entries)}")
            for i, row in enumerate(entries):
                row = list(row)
                if len(row) != dom:
                    raise DimensionMismatch(f"row {i} has {len(row)} entries, expected {dom}")
                for j, v in enumerate(row):
                    v = as_scalar(v)
                    if v:
                        rows[i][j] = v
        self.dom = dom
        self.cod = cod
        self._rows = tuple(rows)
        self._hash = None

    @classmethod
    def _raw(cls, dom: int, cod: int, rows: Sequence[dict]) -> LinMap:
        # trusted constructor: rows must already be canonical and zero-free
        self = object.__new__(cls)
        self.dom = dom
        self.cod = cod
        self._rows = tuple(rows)
        self._hash = None
        return self

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], dom: int | None = None) -> LinMap:
        rows = [list(r) for r in rows]
        if dom is None:
            if not rows:
                raise DimensionMismatch("cannot infer the domain of an empty matrix")
            dom = len(rows[0])
        return cls(dom, len(rows), rows)

    @classmethod
    def column(cls, values: Sequence) -> LinMap:
        return cls(1, len(values), [[v] for v in values])

    @classmethod
    def row(cls, values: Sequence) -> LinMap:
        return cls(len(values), 1, [list(values)])

    # -- inspection -------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.cod, self.dom)

    @property
    def entries(self) -> tuple[tuple[Fraction, ...], ...]:
        """Dense row-major entries as Fractions."""
        return tuple(
            tuple(Fraction(r.get(j, 0)) for j in range(self.dom)) for r in self._rows
        )

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.cod and 0 <= j < self.dom):
            raise IndexError(ij)
        return Fraction(self._rows[i].get(j, 0))

    def items(self) -> Iterable[tuple[int, int, Scalar]]:
        """Nonzero entries as ``(row, col, value)`` in row-major order."""
        for i, r in enumerate(self._rows):
            for j in sorted(r):
                yield i, j, r[j]

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._rows)

    def is_zero(self) -> bool:
        return not any(self._rows)

    def apply(self, vector: Sequence) -> list[Fraction]:
        """Image of a coordinate vector."""
        if len(vector) != self.dom:
            raise DimensionMismatch(f"vector of length {len(vector)} for domain {self.dom}")
        vec = [as_scalar(v) for v in vector]
        return [Fraction(sum(v * vec[j] for j, v in r.items())) for r in self._rows]

    def dense(self) -> list[list[Scalar]]:
        return [[r.get(j, 0) for j in range(self.dom)] for r in self._rows]

    @property
    def T(self) -> LinMap:
        cols: list[dict[int, Scalar]] = [{} for _ in range(self.dom)]
        for i, r in enumerate(self._rows):
            for j, v in r.items():
                cols[j][i] = v
        return LinMap._raw(self.cod, self.dom, cols)

    # -- algebra ----------------------------------------------------------

    def __matmul__(self, other: LinMap) -> LinMap:
        return compose(self, other)

    def __add__(self, other: LinMap) -> LinMap:
        if not isinstance(other, LinMap):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        rows = []
        for a, b in zip(self._rows, other._rows):
            r = dict(a)
            for j, v in b.items():
                s = r.get(j, 0) + v
                if s:
                    r[j] = _canon(s)
                else:
                    r.pop(j, None)
            rows.append(r)
        return LinMap._raw(self.dom, self.cod, rows)

    def __neg__(self) -> LinMap:
        return LinMap._raw(self.dom, self.cod, [{j: -v for j, v in r.items()} for r in self._rows])

    def __sub__(self, other: LinMap) -> LinMap:
        return self + (-other)

    def __rmul__(self, c) -> LinMap:
        c = as_scalar(c)
        if not c:
            return zero(self.cod, self.dom)
        return LinMap._raw(
            self.dom, self.cod, [{j: _canon(c * v) for j, v in r.items()} for r in self._rows]
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinMap):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (self.dom, self.cod, tuple(tuple(sorted(r.items())) for r in self._rows))
            )
        return self._hash

    def __repr__(self) -> str:
        if self.cod * self.dom <= 64:
            body = [[str(v) for v in row] for row in self.dense()]
            return f"LinMap({self.dom}->{self.cod}, {body})"
        return f"LinMap({self.dom}->{self.cod}, nnz={self.nnz})"


def identity(n: int) -> LinMap:
    return LinMap._raw(n, n, [{i: 1} for i in range(n)])


def zero(cod: int, dom: int) -> LinMap:
    return LinMap._raw(dom, cod, [{} for _ in range(cod)])


def compose(g: LinMap, f: LinMap) -> LinMap:
    """``g . f``: first ``f``, then ``g``."""
    if f.cod != g.dom:
        raise DimensionMismatch(f"cannot compose {g.dom}->{g.cod} after {f.dom}->{f.cod}")
    frows = f._rows
    out = []
    for grow in g._rows:
        if len(grow) == 1:
            # permutation-like rows are the common case
            ((k, gv),) = grow.items()
            if gv == 1:
                out.append(frows[k])
                continue
            out.append({j: _canon(gv * fv) for j, fv in frows[k].items()})
            continue
        acc: dict[int, Scalar] = {}
        for k, gv in grow.items():
            for j, fv in frows[k].items():
                acc[j] = acc.get(j, 0) + gv * fv
        out.append({j: _canon(v) for j, v in acc.items() if v})
    return LinMap._raw(f.dom, g.cod, out)


def chain(*maps: LinMap) -> LinMap:
    """Compose maps listed in the order they are applied."""
    if not maps:
        raise ValueError("chain needs at least one map")
    out = maps[0]
    for m in maps[1:]:
        out = compose(m, out)
    return out


def _tensor2(f: LinMap, g: LinMap) -> LinMap:
    gd, gc = g.dom, g.cod
    rows = []
    for frow in f._rows:
        for grow in g._rows:
            r = {}
            for j, fv in frow.items():
                base = j * gd
                if fv == 1:
                    for l, gv in grow.items():
                        r[base + l] = gv
                else:
                    for l, gv in grow.items():
                        r[base + l] = _canon(fv * gv)
            rows.append(r)
    return LinMap._raw(f.dom * gd, f.cod * gc, rows)


def tensor(*maps: LinMap) -> LinMap:
    """Kronecker product, left factor most significant."""
    if not maps:
        return identity(1)
    out = maps[0]
    for m in maps[1:]:
        out = _tensor2(out, m)
    return out


def swap(m: int, n: int) -> LinMap:
    """The symmetry ``m (x) n -> n (x) m``."""
    rows = [None] * (m * n)
    for i in range(m):
        for j in range(n):
            rows[j * m + i] = {i * n + j: 1}
    return LinMap._raw(m * n, m * n, rows)


def permutation(dims: Sequence[int], order: Sequence[int]) -> LinMap:
    """Reorder tensor factors: output factor ``k`` is input factor ``order[k]``."""
    if sorted(order) != list(range(len(dims))):
        raise ValueError(f"{order} is not a permutation of {len(dims)} factors")
    out_dims = [dims[k] for k in order]
    total = 1
    for d in dims:
        total *= d
    in_strides = [1] * len(dims)
    for k in range(len(dims) - 2, -1, -1):
        in_strides[k] = in_strides[k + 1] * dims[k + 1]
    rows = []
    idx = [0] * len(dims)
    for _ in range(total):
        src = sum(idx[p] * in_strides[order[p]] for p in range(len(dims)))
        rows.append({src: 1})
        for p in range(len(dims) - 1, -1, -1):
            idx[p] += 1
            if idx[p] < out_dims[p]:
                break
            idx[p] = 0
    return LinMap._raw(total, total, rows)


# -- elimination ------------------------------------------------------------


def rref(rows: Sequence[Sequence[Scalar]], ncols: int) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form of a dense matrix and its pivot columns."""
    m = [[as_scalar(v) for v in r] for r in rows]
    nrows = len(m)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [_div(x, pv) if x else 0 for x in m[r]]
        prow = m[r]
        for i in range(nrows):
            if i != r:
                fac = m[i][c]
                if fac:
                    m[i] = [_canon(a - fac * b) if b else a for a, b in zip(m[i], prow)]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(f: LinMap) -> int:
    if f.cod <= f.dom:
        return len(rref(f.dense(), f.dom)[1])
    return len(rref(f.T.dense(), f.cod)[1])


@dataclass(frozen=True)
class SplitIdempotent:
    """A retraction ``P`` and section ``I`` with ``I @ P == e`` and ``P @ I == id``."""

    P: LinMap
    I: LinMap

    @property
    def rank(self) -> int:
        return self.P.cod


def split_idempotent(e: LinMap) -> SplitIdempotent:
    """Split an idempotent through its image.

    The section's columns are the nonzero columns of the reduced column
    echelon form of ``e``; the retraction is then forced (it consists of the
    rows of ``e`` at the pivot positions).
    """
    if e.dom != e.cod:
        raise NotSquare(f"idempotent must be square, got {e.cod}x{e.dom}")
    if compose(e, e) != e:
        raise NotIdempotent("e @ e != e")
    n = e.dom
    echelon, pivots = rref(e.T.dense(), n)
    r = len(pivots)
    section_rows: list[dict[int, Scalar]] = [{} for _ in range(n)]
    for k in range(r):
        for i, v in enumerate(echelon[k]):
            if v:
                section_rows[i][k] = v
    I = LinMap._raw(r, n, section_rows)
    P = LinMap._raw(n, r, [e._rows[p] for p in pivots])
    if compose(P, I) != identity(r) or compose(I, P) != e:
        raise NotIdempotent("splitting failed; input is not idempotent")
    return SplitIdempotent(P, I)


def is_invertible(f: LinMap) -> bool:
    return f.dom == f.cod and rank(f) == f.dom


def inverse(f: LinMap) -> LinMap:
    if f.dom != f.cod:
        raise NotInvertible(f"{f.cod}x{f.dom} map is not square")
    n = f.dom
    aug = [row + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(f.dense())]
    m, pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise NotInvertible("map is rank deficient")
    return LinMap(n, n, [row[n:] for row in m])


# -- linear systems in an unknown map ---------------------------------------


def vectorize(f: LinMap) -> LinMap:
    """Row-major flattening of a map into a column vector."""
    rows = []
    for r in f._rows:
        for j in range(f.dom):
            v = r.get(j)
            rows.append({0: v} if v else {})
    return LinMap._raw(1, f.cod * f.dom, rows)


def unvectorize(v: LinMap, cod: int, dom: int) -> LinMap:
    if v.dom != 1 or v.cod != cod * dom:
        raise DimensionMismatch(f"vector of length {v.cod} cannot hold a {cod}x{dom} map")
    rows = []
    for i in range(cod):
        r = {}
        for j in range(dom):
            val = v._rows[i * dom + j].get(0)
            if val:
                r[j] = val
        rows.append(r)
    return LinMap._raw(dom, cod, rows)


def matrix_unit(cod: int, dom: int, i: int, j: int) -> LinMap:
    rows: list[dict[int, Scalar]] = [{} for _ in range(cod)]
    rows[i][j] = 1
    return LinMap._raw(dom, cod, rows)


def linear_operator(fn: Callable[[LinMap], LinMap], cod: int, dom: int) -> LinMap:
    """Matrix of a linear function on ``cod x dom`` maps, acting on flattened maps."""
    cols = []
    out_len = None
    for i in range(cod):
        for j in range(dom):
            img = vectorize(fn(matrix_unit(cod, dom, i, j)))
            if out_len is None:
                out_len = img.cod
            elif img.cod != out_len:
                raise DimensionMismatch("operator images have varying shapes")
            cols.append(img)
    if out_len is None:
        out_len = 0
    rows: list[dict[int, Scalar]] = [{} for _ in range(out_len)]
    for k, col in enumerate(cols):
        for i, r in enumerate(col._rows):
            v = r.get(0)
            if v:
                rows[i][k] = v
    return LinMap._raw(cod * dom, out_len, rows)


class NoSolution:
    """Marker value for an inconsistent linear system."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return "NoSolution"


NO_SOLUTION = NoSolution()


@dataclass(frozen=True)
class Solution:
    """Basic solution of a consistent system (free variables set to zero)."""

    value: LinMap
    nullity: int

    @property
    def unique(self) -> bool:
        return self.nullity == 0


def solve_linear(
    constraints: Sequence[tuple[LinMap, LinMap]], cod: int, dom: int
) -> Solution | NoSolution:
    """Solve ``op(X) = rhs`` for every constraint, for an unknown ``cod x dom`` map X.

    Each ``op`` acts on the row-major flattening of X; ``rhs`` is any map whose
    flattening has ``op.cod`` entries.
    """
    n = cod * dom
    rows: list[list[Scalar]] = []
    for op, rhs in constraints:
        b = vectorize(rhs)
        if op.dom != n:
            raise DimensionMismatch(f"operator acts on {op.dom} unknowns, expected {n}")
        if b.cod != op.cod:
            raise DimensionMismatch(f"operator has {op.cod} outputs, rhs has {b.cod}")
        dense = op.dense()
        for i in range(op.cod):
            rows.append(dense[i] + [b._rows[i].get(0, 0)])
    if not rows:
        return Solution(zero(cod, dom), n)
    m, pivots = rref(rows, n + 1)
    if pivots and pivots[-1] == n:
        return NO_SOLUTION
    x: list[Scalar] = [0] * n
    for k, c in enumerate(pivots):
        x[c] = m[k][n]
    return Solution(unvectorize(LinMap.column(x), cod, dom), n - len(pivots))
