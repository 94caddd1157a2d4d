"""Shared builders for hand-made fixtures.

Everything here assembles matrices entry by entry from multiplication
tables, deliberately bypassing settruss.linearize, so the set-level and
linear-level routes stay independent when tests compare them.
"""

from trusslab.coalgebra import ComonoidData, NonUnitalBimonoidData
from trusslab.cocycle import InvertibleCocycle
from trusslab.fields import FieldSpec
from trusslab.hopftruss import HopfTruss
from trusslab.linmap import LinMap, identity, invert, kron


def table_unit(table) -> int:
    n = len(table)
    return next(u for u in range(n)
                if all(table[u][a] == a and table[a][u] == a for a in range(n)))


def truss_from_tables(field: FieldSpec, table1, table2, omega=None) -> HopfTruss:
    """Hopf truss on the free module over a finite carrier.

    table1 must be a group table, table2 any binary operation; omega
    defaults to the derived cocycle a -> a *2 unit.
    """
    n = len(table1)
    unit = table_unit(table1)
    inv = [next(b for b in range(n) if table1[a][b] == unit) for a in range(n)]
    if omega is None:
        omega = [table2[a][unit] for a in range(n)]
    one = field.one
    comonoid = ComonoidData(
        n,
        LinMap(field, n * n, n, {(a * n + a, a): one for a in range(n)}),
        LinMap(field, 1, n, {(0, a): one for a in range(n)}))
    return HopfTruss(
        comonoid,
        LinMap(field, n, 1, {(unit, 0): one}),
        LinMap(field, n, n * n,
               {(table1[a][b], a * n + b): one for a in range(n) for b in range(n)}),
        LinMap(field, n, n * n,
               {(table2[a][b], a * n + b): one for a in range(n) for b in range(n)}),
        LinMap(field, n, n, {(inv[a], a): one for a in range(n)}),
        LinMap(field, n, n, {(omega[a], a): one for a in range(n)}))


def cyclic_table(n: int):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def cyclic_truss(field: FieldSpec, n: int) -> HopfTruss:
    """Group algebra of Z/n seen as a Hopf truss with both products equal."""
    t = cyclic_table(n)
    return truss_from_tables(field, t, t)


def perturbed(m: LinMap, i: int, j: int) -> LinMap:
    """Add 1 to a single matrix entry."""
    entries = dict(m.items())
    entries[(i, j)] = m.field.add(entries.get((i, j), m.field.zero), m.field.one)
    return LinMap(m.field, m.cod, m.dom, entries)


def permute_cocycle_source(c: InvertibleCocycle, perm) -> InvertibleCocycle:
    """Relabel the source of a cocycle along a permutation, target untouched."""
    n = c.bimonoid.dim
    q = LinMap(c.field, n, n, {(perm[a], a): 1 for a in range(n)})
    qi = invert(q)
    moved = NonUnitalBimonoidData(
        ComonoidData(n, kron(q, q) @ c.bimonoid.delta @ qi,
                     c.bimonoid.epsilon @ qi),
        q @ c.bimonoid.mu @ kron(qi, qi))
    return InvertibleCocycle(moved, c.hopf,
                             c.cocycle @ qi,
                             q @ c.twist @ qi,
                             c.action @ kron(qi, identity(c.field, c.hopf.dim)))
