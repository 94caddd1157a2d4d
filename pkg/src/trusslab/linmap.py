"""Exact linear maps between based spaces, with tensor (Kronecker) structure.

A LinMap is a cod x dom matrix over an exact field: entry (i, j) is the
coefficient of codomain basis vector i in the image of domain basis
vector j.  Tensor products use the left-major flattening convention
throughout: e_i (x) e_j of an m (x) n factor pair sits at flat index
i*n + j.  Maps are immutable; entries are stored sparsely but the
semantics are dense (absent entries are exact zeros).

Elimination (nullspace, invert, solve, split_idempotent) is
deterministic: reduced row echelon form with leftmost pivot column and
first nonzero row, so returned bases are canonical.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import (
    AmbiguousSystemError,
    DimensionMismatchError,
    InconsistentSystemError,
    NotIdempotentError,
    NotInvertibleError,
)
from .fields import FieldSpec, Scalar


class LinMap:
    """Immutable exact matrix with dense semantics."""

    __slots__ = ("field", "cod", "dom", "_entries", "_rows", "_cols", "_hash")

    def __init__(self, field: FieldSpec, cod: int, dom: int, entries) -> None:
        if cod < 0 or dom < 0:
            raise DimensionMismatchError(f"negative shape {cod}x{dom}")
        self.field = field
        self.cod = cod
        self.dom = dom
        data: Dict[Tuple[int, int], Scalar] = {}
        items = entries.items() if isinstance(entries, dict) else entries
        for key, value in items:
            i, j = key
            if not (0 <= i < cod and 0 <= j < dom):
                raise DimensionMismatchError(
                    f"entry ({i},{j}) outside {cod}x{dom}")
            value = field.coerce(value)
            if not field.is_zero(value):
                data[(i, j)] = value
        self._entries = data
        self._rows = None
        self._cols = None
        self._hash = None

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence], dom: int | None = None) -> "LinMap":
        cod = len(rows)
        if cod == 0:
            if dom is None:
                raise DimensionMismatchError("empty row list needs an explicit dom")
            return cls(field, 0, dom, {})
        widths = {len(r) for r in rows}
        if len(widths) != 1:
            raise DimensionMismatchError("ragged rows")
        width = widths.pop()
        if dom is not None and dom != width:
            raise DimensionMismatchError(f"dom {dom} != row width {width}")
        entries = {}
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                entries[(i, j)] = value
        return cls(field, cod, width, entries)

    @classmethod
    def from_columns(cls, field: FieldSpec, cod: int, columns: Sequence["LinMap"]) -> "LinMap":
        """Assemble column vectors (maps with dom 1) into one map."""
        entries = {}
        for j, col in enumerate(columns):
            if col.dom != 1 or col.cod != cod:
                raise DimensionMismatchError("column vectors must be cod x 1")
            col.field.require_same(field)
            for (i, _), value in col.items():
                entries[(i, j)] = value
        return cls(field, cod, len(columns), entries)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "LinMap":
        one = field.one
        return cls(field, n, n, {(i, i): one for i in range(n)})

    @classmethod
    def zero(cls, field: FieldSpec, cod: int, dom: int) -> "LinMap":
        return cls(field, cod, dom, {})

    @classmethod
    def basis_vector(cls, field: FieldSpec, n: int, index: int) -> "LinMap":
        return cls(field, n, 1, {(index, 0): field.one})

    # -- access ---------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.cod, self.dom)

    def entry(self, i: int, j: int) -> Scalar:
        if not (0 <= i < self.cod and 0 <= j < self.dom):
            raise DimensionMismatchError(f"index ({i},{j}) outside {self.cod}x{self.dom}")
        return self._entries.get((i, j), self.field.zero)

    def items(self) -> Iterable[Tuple[Tuple[int, int], Scalar]]:
        return self._entries.items()

    def rows(self) -> List[List[Scalar]]:
        zero = self.field.zero
        out = [[zero] * self.dom for _ in range(self.cod)]
        for (i, j), value in self._entries.items():
            out[i][j] = value
        return out

    def column(self, j: int) -> "LinMap":
        entries = {(i, 0): v for (i, jj), v in self._entries.items() if jj == j}
        return LinMap(self.field, self.cod, 1, entries)

    def is_zero(self) -> bool:
        return not self._entries

    def is_identity(self) -> bool:
        if self.cod != self.dom or len(self._entries) != self.cod:
            return False
        one = self.field.one
        return all(self._entries.get((i, i)) == one for i in range(self.cod))

    def _by_row(self):
        if self._rows is None:
            rows: Dict[int, list] = {}
            for (i, j), value in self._entries.items():
                rows.setdefault(i, []).append((j, value))
            self._rows = rows
        return self._rows

    def _by_col(self):
        if self._cols is None:
            cols: Dict[int, list] = {}
            for (i, j), value in self._entries.items():
                cols.setdefault(j, []).append((i, value))
            self._cols = cols
        return self._cols

    # -- algebra ----------------------------------------------------------

    def compose(self, other: "LinMap") -> "LinMap":
        """self ∘ other; requires dom(self) == cod(other)."""
        self.field.require_same(other.field)
        if self.dom != other.cod:
            raise DimensionMismatchError(
                f"compose: dom {self.dom} != cod {other.cod}")
        field = self.field
        mul, add = field.mul, field.add
        out: Dict[Tuple[int, int], Scalar] = {}
        cols = self._by_col()
        rows = other._by_row()
        for k, gcol in cols.items():
            frow = rows.get(k)
            if not frow:
                continue
            for i, u in gcol:
                for j, v in frow:
                    key = (i, j)
                    acc = out.get(key)
                    out[key] = mul(u, v) if acc is None else add(acc, mul(u, v))
        return LinMap(field, self.cod, other.dom, out)

    def __matmul__(self, other: "LinMap") -> "LinMap":
        return self.compose(other)

    def kron(self, other: "LinMap") -> "LinMap":
        """Tensor product; left-major flat indices (i1*cod2 + i2, j1*dom2 + j2)."""
        self.field.require_same(other.field)
        mul = self.field.mul
        cod2, dom2 = other.cod, other.dom
        out = {}
        for (i1, j1), u in self._entries.items():
            for (i2, j2), v in other._entries.items():
                out[(i1 * cod2 + i2, j1 * dom2 + j2)] = mul(u, v)
        return LinMap(self.field, self.cod * cod2, self.dom * dom2, out)

    def __add__(self, other: "LinMap") -> "LinMap":
        self._require_same_shape(other)
        add = self.field.add
        out = dict(self._entries)
        for key, value in other._entries.items():
            out[key] = add(out[key], value) if key in out else value
        return LinMap(self.field, self.cod, self.dom, out)

    def __sub__(self, other: "LinMap") -> "LinMap":
        self._require_same_shape(other)
        sub, neg = self.field.sub, self.field.neg
        out = dict(self._entries)
        for key, value in other._entries.items():
            out[key] = sub(out[key], value) if key in out else neg(value)
        return LinMap(self.field, self.cod, self.dom, out)

    def __neg__(self) -> "LinMap":
        neg = self.field.neg
        return LinMap(self.field, self.cod, self.dom,
                      {k: neg(v) for k, v in self._entries.items()})

    def scale(self, scalar) -> "LinMap":
        scalar = self.field.coerce(scalar)
        mul = self.field.mul
        return LinMap(self.field, self.cod, self.dom,
                      {k: mul(scalar, v) for k, v in self._entries.items()})

    def transpose(self) -> "LinMap":
        return LinMap(self.field, self.dom, self.cod,
                      {(j, i): v for (i, j), v in self._entries.items()})

    def _require_same_shape(self, other: "LinMap") -> None:
        self.field.require_same(other.field)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shape {self.shape} != {other.shape}")

    # -- identity and hashing ---------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and self._entries == other._entries)

    def __hash__(self) -> int:
        if self._hash is None:
            items = tuple(sorted(self._entries.items()))
            self._hash = hash((self.field, self.cod, self.dom, items))
        return self._hash

    def __repr__(self) -> str:
        return f"LinMap({self.field}, {self.cod}x{self.dom}, nnz={len(self._entries)})"

    def __setattr__(self, name, value):
        # Cache slots stay writable; the matrix itself is frozen.
        if name in ("_rows", "_cols", "_hash") or not hasattr(self, "_hash"):
            object.__setattr__(self, name, value)
        else:
            raise AttributeError("LinMap is immutable")


def compose(g: LinMap, f: LinMap) -> LinMap:
    """g ∘ f."""
    return g.compose(f)


def kron(f: LinMap, g: LinMap) -> LinMap:
    """f (x) g with left-major flattening."""
    return f.kron(g)


def swap(m: int, n: int, field: FieldSpec) -> LinMap:
    """The braiding M(x)N -> N(x)M: flat index i*n + j goes to j*m + i."""
    one = field.one
    entries = {}
    for i in range(m):
        for j in range(n):
            entries[(j * m + i, i * n + j)] = one
    return LinMap(field, m * n, m * n, entries)


def identity(field: FieldSpec, n: int) -> LinMap:
    return LinMap.identity(field, n)


def zero_map(field: FieldSpec, cod: int, dom: int) -> LinMap:
    return LinMap.zero(field, cod, dom)


# -- elimination ---------------------------------------------------------


def _rref(field: FieldSpec, rows: List[List[Scalar]], pivot_limit: int | None = None) -> Tuple[List[List[Scalar]], List[int]]:
    """Reduced row echelon form in place; returns (rows, pivot columns).

    Pivot rule: scan columns left to right, take the first remaining row
    with a nonzero entry.  `pivot_limit` restricts pivoting to the first
    columns (for augmented systems).
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    if pivot_limit is not None:
        ncols = min(ncols, pivot_limit)
    is_zero, inv, mul, sub = field.is_zero, field.inv, field.mul, field.sub
    pivots: List[int] = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, nrows):
            if not is_zero(rows[r][col]):
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        scale = inv(rows[rank][col])
        rows[rank] = [mul(scale, v) for v in rows[rank]]
        for r in range(nrows):
            if r != rank and not is_zero(rows[r][col]):
                factor = rows[r][col]
                rows[r] = [sub(a, mul(factor, b)) for a, b in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    return rows, pivots


def rank(f: LinMap) -> int:
    _, pivots = _rref(f.field, f.rows())
    return len(pivots)


def nullspace(f: LinMap) -> List[LinMap]:
    """Canonical exact basis of {x : f(x) = 0}, as dom(f) x 1 column vectors.

    For each free column j the basis vector has 1 at j and the negated
    echelon coefficients at the pivot columns, ordered by j ascending;
    assembled as columns this is a reduced column echelon basis.
    """
    field = f.field
    rows, pivots = _rref(field, f.rows())
    pivot_set = set(pivots)
    basis = []
    one, zero, neg = field.one, field.zero, field.neg
    for j in range(f.dom):
        if j in pivot_set:
            continue
        entries = {(j, 0): one}
        for r, pc in enumerate(pivots):
            value = rows[r][j]
            if not field.is_zero(value):
                entries[(pc, 0)] = neg(value)
        basis.append(LinMap(field, f.dom, 1, entries))
    return basis


def invert(f: LinMap) -> LinMap:
    """Exact two-sided inverse of a square map, else NotInvertibleError."""
    if f.cod != f.dom:
        raise NotInvertibleError(f"non-square shape {f.shape}")
    field = f.field
    n = f.cod
    zero, one = field.zero, field.one
    aug = []
    dense = f.rows()
    for i in range(n):
        row = list(dense[i]) + [zero] * n
        row[n + i] = one
        aug.append(row)
    aug, pivots = _rref(field, aug, pivot_limit=n)
    if pivots != list(range(n)):
        raise NotInvertibleError(f"map of rank {len(pivots)} < {n}")
    entries = {}
    for i in range(n):
        for j in range(n):
            value = aug[i][n + j]
            if not field.is_zero(value):
                entries[(i, j)] = value
    return LinMap(field, n, n, entries)


def solve_through(a: LinMap, b: LinMap) -> LinMap:
    """The unique x with a ∘ x = b; a must be injective and the system consistent."""
    a.field.require_same(b.field)
    if a.cod != b.cod:
        raise DimensionMismatchError(f"cod {a.cod} != cod {b.cod}")
    field = a.field
    n, m = a.dom, b.dom
    dense_a = a.rows()
    dense_b = b.rows()
    aug = [list(dense_a[i]) + list(dense_b[i]) for i in range(a.cod)]
    if a.cod == 0:
        if n > 0:
            raise AmbiguousSystemError("zero equations, free unknowns")
        return LinMap(field, 0, m, {})
    aug, pivots = _rref(field, aug, pivot_limit=n)
    if len(pivots) < len(aug):
        for r in range(len(pivots), len(aug)):
            if any(not field.is_zero(v) for v in aug[r][n:]):
                raise InconsistentSystemError("no exact solution")
    if [p for p in pivots if p < n] != list(range(n)):
        raise AmbiguousSystemError("left factor is not injective")
    entries = {}
    for r in range(n):
        for j in range(m):
            value = aug[r][n + j]
            if not field.is_zero(value):
                entries[(r, j)] = value
    return LinMap(field, n, m, entries)


def image_basis(f: LinMap) -> List[LinMap]:
    """Canonical column-echelon basis of the column space of f."""
    field = f.field
    rows, pivots = _rref(field, f.transpose().rows())
    basis = []
    for r in range(len(pivots)):
        entries = {}
        for i, value in enumerate(rows[r]):
            if not field.is_zero(value):
                entries[(i, 0)] = value
        basis.append(LinMap(field, f.cod, 1, entries))
    return basis


def split_idempotent(q: LinMap) -> Tuple[LinMap, LinMap]:
    """Split q = i ∘ p with p ∘ i = id on the canonical image basis.

    Returns (p, i): p projects onto the image coordinates, i includes
    the image back, so i ∘ p = q exactly.
    """
    if q.cod != q.dom:
        raise NotIdempotentError(f"non-square shape {q.shape}")
    if q @ q != q:
        raise NotIdempotentError("map is not idempotent")
    incl = LinMap.from_columns(q.field, q.cod, image_basis(q))
    proj = solve_through(incl, q)
    return proj, incl
