"""Skew trusses on finite sets.

A skew truss is a set carrying a group product, a semigroup product,
and the map a -> a*1 tying them through a twisted distributivity law.
This module checks those axioms exhaustively, enumerates all trusses
over a fixed group, and moves between the set level and the linear
level: linearize builds the Hopf truss on the free module over the set,
truss_of_grouplikes recovers a skew truss from the grouplike elements
of a Hopf truss.

Elements are 0-based indices; Cayley tables are tuples of tuples with
table[a][b] the product of a and b. The group unit is stored, not
assumed to be index 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .coalgebra import ComonoidData, GROUPLIKE_BASIS, GROUPLIKE_EXHAUSTIVE, grouplikes
from .errors import (
    BoundExceededError,
    ClosureError,
    DimensionMismatchError,
    IncompleteGrouplikesError,
    InvalidStructureError,
)
from .fields import PRIME_KIND, FieldSpec
from .hopftruss import HopfTruss
from .linmap import LinMap, kron
from .report import CheckResult, VerificationReport, condition

Table = tuple[tuple[int, ...], ...]


def _as_table(rows) -> Table:
    table = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(table)
    for row in table:
        if len(row) != n:
            raise DimensionMismatchError("Cayley table must be square")
        for x in row:
            if not 0 <= x < n:
                raise DimensionMismatchError(f"table entry {x} out of range for size {n}")
    return table


def _associativity_witness(table: Table) -> tuple[int, int, int] | None:
    n = len(table)
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            row_a = table[a]
            for c in range(n):
                if table[ab][c] != row_a[table[b][c]]:
                    return (a, b, c)
    return None


@dataclass(frozen=True)
class FiniteGroup:
    table: Table
    unit: int
    inv: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "table", _as_table(self.table))
        object.__setattr__(self, "inv", tuple(int(x) for x in self.inv))
        n = self.size
        if not 0 <= self.unit < n:
            raise DimensionMismatchError(f"unit index {self.unit} out of range")
        if len(self.inv) != n or any(not 0 <= x < n for x in self.inv):
            raise DimensionMismatchError("inverse vector does not match table size")

    @property
    def size(self) -> int:
        return len(self.table)

    @classmethod
    def from_table(cls, rows) -> "FiniteGroup":
        """Derive unit and inverses, refusing tables that are not groups."""
        table = _as_table(rows)
        n = len(table)
        if n == 0:
            raise InvalidStructureError("empty Cayley table")
        witness = _associativity_witness(table)
        if witness is not None:
            raise InvalidStructureError(f"not associative at {witness}")
        unit = None
        for u in range(n):
            if all(table[u][a] == a and table[a][u] == a for a in range(n)):
                unit = u
                break
        if unit is None:
            raise InvalidStructureError("no two-sided unit")
        inv = []
        for a in range(n):
            b = next((b for b in range(n)
                      if table[a][b] == unit and table[b][a] == unit), None)
            if b is None:
                raise InvalidStructureError(f"element {a} has no two-sided inverse")
            inv.append(b)
        return cls(table, unit, tuple(inv))


@dataclass(frozen=True)
class FiniteSemigroup:
    table: Table

    def __post_init__(self) -> None:
        object.__setattr__(self, "table", _as_table(self.table))

    @property
    def size(self) -> int:
        return len(self.table)

    @classmethod
    def from_table(cls, rows) -> "FiniteSemigroup":
        table = _as_table(rows)
        witness = _associativity_witness(table)
        if witness is not None:
            raise InvalidStructureError(f"not associative at {witness}")
        return cls(table)


@dataclass(frozen=True)
class SkewTruss:
    group: FiniteGroup
    semigroup: FiniteSemigroup
    omega: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.group.size
        if self.semigroup.size != n:
            raise DimensionMismatchError("group and semigroup sizes differ")
        object.__setattr__(self, "omega", tuple(int(x) for x in self.omega))
        if len(self.omega) != n or any(not 0 <= x < n for x in self.omega):
            raise DimensionMismatchError("omega does not match carrier size")

    @property
    def size(self) -> int:
        return self.group.size


@dataclass(frozen=True)
class SetMorphism:
    src_size: int
    dst_size: int
    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "mapping", tuple(int(x) for x in self.mapping))
        if len(self.mapping) != self.src_size:
            raise DimensionMismatchError("mapping length does not match source size")
        if any(not 0 <= x < self.dst_size for x in self.mapping):
            raise DimensionMismatchError("mapping value out of range for target")


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise DimensionMismatchError("cyclic group needs size >= 1")
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteGroup(table, 0, tuple((-a) % n for a in range(n)))


def symmetric_group(n: int) -> FiniteGroup:
    """Permutations of {0..n-1} in lexicographic order, composed right-to-left."""
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[tuple(p[q[x]] for x in range(n))] for q in perms)
        for p in perms)
    return FiniteGroup.from_table(table)


def trivial_truss(g: FiniteGroup) -> SkewTruss:
    """Both products agree; the cocycle is the identity."""
    return SkewTruss(g, FiniteSemigroup(g.table), tuple(range(g.size)))


def left_projection_truss(g: FiniteGroup) -> SkewTruss:
    table = tuple(tuple(a for _ in range(g.size)) for a in range(g.size))
    return SkewTruss(g, FiniteSemigroup(table), tuple(range(g.size)))


def right_projection_truss(g: FiniteGroup) -> SkewTruss:
    table = tuple(tuple(range(g.size)) for _ in range(g.size))
    return SkewTruss(g, FiniteSemigroup(table), tuple(g.unit for _ in range(g.size)))


def derive_omega(g: FiniteGroup, s: FiniteSemigroup) -> tuple[int, ...]:
    """The cocycle forced by the axioms: omega(a) = a *2 unit."""
    if g.size != s.size:
        raise DimensionMismatchError("group and semigroup sizes differ")
    return tuple(s.table[a][g.unit] for a in range(g.size))


def _table_condition(name: str, anchor: str, witness, total: int) -> CheckResult:
    if witness is None:
        return condition(name, anchor, True, f"all {total} instances hold")
    return condition(name, anchor, False, f"first failure at {witness}")


def verify_skew_truss(t: SkewTruss) -> VerificationReport:
    """Group laws, semigroup associativity, derived cocycle, distributivity."""
    g, s = t.group, t.semigroup
    n = t.size
    t1, t2 = g.table, s.table

    unit_bad = next(((g.unit, a) for a in range(n)
                     if t1[g.unit][a] != a or t1[a][g.unit] != a), None)
    inv_bad = next((a for a in range(n)
                    if t1[a][g.inv[a]] != g.unit or t1[g.inv[a]][a] != g.unit), None)
    omega_bad = next((a for a in range(n) if t.omega[a] != t2[a][g.unit]), None)

    # a *2 (b *1 c) = (a *2 b) *1 inv(omega(a)) *1 (a *2 c)
    dia_bad = None
    failures = 0
    for a in range(n):
        wa_inv = g.inv[t.omega[a]]
        row2 = t2[a]
        for b in range(n):
            left_part = t1[row2[b]][wa_inv]
            for c in range(n):
                lhs = row2[t1[b][c]]
                rhs = t1[left_part][row2[c]]
                if lhs != rhs:
                    failures += 1
                    if dia_bad is None:
                        dia_bad = (a, b, c, lhs, rhs)

    checks = [
        _table_condition("group.assoc", "(a*1b)*1c = a*1(b*1c)",
                         _associativity_witness(t1), n ** 3),
        _table_condition("group.unit", "unit*1a = a = a*1unit", unit_bad, n),
        _table_condition("group.inverse", "a*1inv(a) = unit = inv(a)*1a", inv_bad, n),
        _table_condition("semigroup.assoc", "(a*2b)*2c = a*2(b*2c)",
                         _associativity_witness(t2), n ** 3),
        _table_condition("cocycle.derived", "omega(a) = a*2unit", omega_bad, n),
    ]
    if dia_bad is None:
        checks.append(condition(
            "compat.distributivity",
            "a*2(b*1c) = (a*2b)*1inv(omega(a))*1(a*2c)",
            True, f"all {n ** 3} triples hold"))
    else:
        a, b, c, lhs, rhs = dia_bad
        checks.append(condition(
            "compat.distributivity",
            "a*2(b*1c) = (a*2b)*1inv(omega(a))*1(a*2c)",
            False,
            f"first failure at (a,b,c)={(a, b, c)}: lhs={lhs} rhs={rhs}; "
            f"{failures} of {n ** 3} triples fail"))
    return VerificationReport("skew-truss", tuple(checks))


def verify_set_morphism(f: SetMorphism, src: SkewTruss, dst: SkewTruss) -> VerificationReport:
    if f.src_size != src.size or f.dst_size != dst.size:
        raise DimensionMismatchError("morphism shape does not match trusses")
    n = src.size
    fm = f.mapping
    g_bad = next(((a, b) for a in range(n) for b in range(n)
                  if fm[src.group.table[a][b]] != dst.group.table[fm[a]][fm[b]]), None)
    s_bad = next(((a, b) for a in range(n) for b in range(n)
                  if fm[src.semigroup.table[a][b]] != dst.semigroup.table[fm[a]][fm[b]]), None)
    w_bad = next((a for a in range(n)
                  if dst.omega[fm[a]] != fm[src.omega[a]]), None)
    return VerificationReport("truss-map", (
        _table_condition("group.hom", "f(a*1b) = f(a)*1f(b)", g_bad, n * n),
        _table_condition("semigroup.hom", "f(a*2b) = f(a)*2f(b)", s_bad, n * n),
        _table_condition("implied.cocycle", "omega'∘f = f∘omega", w_bad, n),
    ))


def _group_endomorphisms(g: FiniteGroup) -> list[tuple[int, ...]]:
    n = g.size
    t1 = g.table
    out = []
    for f in itertools.product(range(n), repeat=n):
        if all(f[t1[a][b]] == t1[f[a]][f[b]] for a in range(n) for b in range(n)):
            out.append(f)
    return out


def _valid_rows(g: FiniteGroup) -> list[tuple[int, ...]]:
    # A row r of the second product satisfies its slice of the
    # distributivity law exactly when x -> inv(r(unit)) *1 r(x) is an
    # endomorphism of the group, so every candidate row is a left
    # translate of an endomorphism.
    n = g.size
    t1 = g.table
    rows = {tuple(t1[w][f[x]] for x in range(n))
            for w in range(n) for f in _group_endomorphisms(g)}
    return sorted(rows)


def enumerate_skew_trusses(g: FiniteGroup, max_size: int = 4) -> list[SkewTruss]:
    """All skew trusses over the fixed group g, tables in lexicographic order.

    Searches translate-of-endomorphism rows (each such row is exactly the
    per-row content of the distributivity law) and prunes by associativity
    of the partial table. Output order matches a raw lexicographic sweep
    of all n^(n*n) tables.
    """
    n = g.size
    if n > max_size:
        raise BoundExceededError(
            f"carrier size {n} exceeds enumeration bound {max_size}")
    rows = _valid_rows(g)
    found: list[SkewTruss] = []
    chosen: list[tuple[int, ...]] = []

    def partial_ok() -> bool:
        k = len(chosen)
        for a in range(k):
            row_a = chosen[a]
            for b in range(k):
                ab = row_a[b]
                if ab >= k:
                    continue
                row_ab = chosen[ab]
                row_b = chosen[b]
                for c in range(k):
                    bc = row_b[c]
                    if bc >= k:
                        continue
                    if row_ab[c] != row_a[bc]:
                        return False
        return True

    def extend() -> None:
        if len(chosen) == n:
            table = tuple(chosen)
            found.append(SkewTruss(
                g, FiniteSemigroup(table),
                derive_omega(g, FiniteSemigroup(table))))
            return
        for row in rows:
            chosen.append(row)
            if partial_ok():
                extend()
            chosen.pop()

    extend()
    return found


def canonical_form(t: SkewTruss) -> tuple[Table, Table]:
    """Minimal relabeling of both tables; equal forms mean isomorphic trusses."""
    n = t.size
    t1, t2 = t.group.table, t.semigroup.table
    best = None
    for p in itertools.permutations(range(n)):
        # p maps old labels to new ones, pinv[i] is the old label shown as i
        pinv = sorted(range(n), key=p.__getitem__)
        r1 = tuple(tuple(p[t1[pinv[a]][pinv[b]]] for b in range(n)) for a in range(n))
        r2 = tuple(tuple(p[t2[pinv[a]][pinv[b]]] for b in range(n)) for a in range(n))
        key = (r1, r2)
        if best is None or key < best:
            best = key
    return best


def isomorphism_classes(trusses: list[SkewTruss]) -> list[list[SkewTruss]]:
    """Group trusses by canonical form, preserving first-seen order."""
    buckets: dict[tuple[Table, Table], list[SkewTruss]] = {}
    for t in trusses:
        buckets.setdefault(canonical_form(t), []).append(t)
    return list(buckets.values())


def linearize(t: SkewTruss, field: FieldSpec) -> HopfTruss:
    """The Hopf truss on the free module with the truss elements as basis.

    Basis vectors are grouplike, products and maps extend the tables
    linearly. Refuses a carrier that fails the set-level axioms.
    """
    rep = verify_skew_truss(t)
    if not rep.ok:
        raise InvalidStructureError("not a skew truss", report=rep)
    n = t.size
    delta = LinMap(field, n * n, n, {(a * n + a, a): field.one for a in range(n)})
    epsilon = LinMap(field, 1, n, {(0, a): field.one for a in range(n)})
    eta = LinMap(field, n, 1, {(t.group.unit, 0): field.one})
    mu1 = LinMap(field, n, n * n,
                 {(t.group.table[a][b], a * n + b): field.one
                  for a in range(n) for b in range(n)})
    mu2 = LinMap(field, n, n * n,
                 {(t.semigroup.table[a][b], a * n + b): field.one
                  for a in range(n) for b in range(n)})
    antipode = LinMap(field, n, n, {(t.group.inv[a], a): field.one for a in range(n)})
    sigma = LinMap(field, n, n, {(t.omega[a], a): field.one for a in range(n)})
    return HopfTruss(ComonoidData(n, delta, epsilon),
                     eta, mu1, mu2, antipode, sigma)


def _grouplike_index(vectors: list[LinMap], v: LinMap, what: str) -> int:
    for i, u in enumerate(vectors):
        if u == v:
            return i
    raise ClosureError(f"{what} is not a grouplike of the carrier")


def truss_of_grouplikes(h: HopfTruss) -> SkewTruss:
    """Restrict both products and the cocycle to the grouplike elements.

    Needs a complete grouplike scan: basis-diagonal coproducts always
    qualify, otherwise a prime-field carrier is searched exhaustively.
    """
    gl, complete = grouplikes(h.comonoid, mode=GROUPLIKE_BASIS)
    if not complete:
        if h.field.kind != PRIME_KIND:
            raise IncompleteGrouplikesError(
                "grouplike scan is incomplete: coproduct is not basis-diagonal "
                "and the field is not finite")
        gl, complete = grouplikes(h.comonoid, mode=GROUPLIKE_EXHAUSTIVE)
        if not complete:
            raise IncompleteGrouplikesError("exhaustive grouplike scan hit its bound")
    if not gl:
        raise ClosureError("carrier has no grouplikes")

    def product_table(mu: LinMap, label: str) -> Table:
        return tuple(
            tuple(_grouplike_index(gl, mu @ kron(a, b), f"{label}-product of grouplikes")
                  for b in gl)
            for a in gl)

    table1 = product_table(h.mu1, "first")
    table2 = product_table(h.mu2, "second")
    unit = _grouplike_index(gl, h.eta, "unit")
    omega = tuple(_grouplike_index(gl, h.cocycle @ v, "cocycle image") for v in gl)
    try:
        group = FiniteGroup.from_table(table1)
    except InvalidStructureError as exc:
        raise ClosureError(f"grouplikes do not form a group: {exc}") from exc
    if group.unit != unit:
        raise ClosureError("unit of the grouplike group differs from the carrier unit")
    return SkewTruss(group, FiniteSemigroup(table2), omega)
