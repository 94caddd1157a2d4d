"""Structure-constant bundles for (co)monoids, bimonoids, and Hopf monoids.

Every bundle is a frozen record of LinMaps over one field; verifiers
return a VerificationReport whose checks are exact matrix identities.
All composite maps follow the left-major tensor convention of linmap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Tuple

from .errors import (
    AmbiguousSystemError,
    BoundExceededError,
    DimensionMismatchError,
    InconsistentSystemError,
    NoAntipodeError,
)
from .fields import PRIME_KIND, FieldSpec
from .linmap import LinMap, identity, kron, solve_through, swap
from .report import VerificationReport, equation

GROUPLIKE_BASIS = "basis"
GROUPLIKE_EXHAUSTIVE = "exhaustive"


def _expect_shape(name: str, m: LinMap, cod: int, dom: int) -> None:
    if m.shape != (cod, dom):
        raise DimensionMismatchError(
            f"{name} has shape {m.shape}, expected {(cod, dom)}")


@dataclass(frozen=True)
class ComonoidData:
    """Comonoid structure constants: delta (dim -> dim^2), epsilon (dim -> 1)."""

    dim: int
    delta: LinMap
    epsilon: LinMap

    def __post_init__(self) -> None:
        self.delta.field.require_same(self.epsilon.field)
        _expect_shape("delta", self.delta, self.dim * self.dim, self.dim)
        _expect_shape("epsilon", self.epsilon, 1, self.dim)

    @property
    def field(self) -> FieldSpec:
        return self.delta.field


@dataclass(frozen=True)
class MonoidData:
    """Monoid structure constants: eta (1 -> dim), mu (dim^2 -> dim)."""

    dim: int
    eta: LinMap
    mu: LinMap

    def __post_init__(self) -> None:
        self.eta.field.require_same(self.mu.field)
        _expect_shape("eta", self.eta, self.dim, 1)
        _expect_shape("mu", self.mu, self.dim, self.dim * self.dim)

    @property
    def field(self) -> FieldSpec:
        return self.mu.field


@dataclass(frozen=True)
class NonUnitalBimonoidData:
    """A comonoid with an associative product that is a comonoid morphism."""

    comonoid: ComonoidData
    mu: LinMap

    def __post_init__(self) -> None:
        self.comonoid.field.require_same(self.mu.field)
        _expect_shape("mu", self.mu, self.dim, self.dim * self.dim)

    @property
    def dim(self) -> int:
        return self.comonoid.dim

    @property
    def field(self) -> FieldSpec:
        return self.comonoid.field

    @property
    def delta(self) -> LinMap:
        return self.comonoid.delta

    @property
    def epsilon(self) -> LinMap:
        return self.comonoid.epsilon


@dataclass(frozen=True)
class HopfMonoidData:
    """Unital bimonoid with antipode."""

    comonoid: ComonoidData
    eta: LinMap
    mu: LinMap
    antipode: LinMap

    def __post_init__(self) -> None:
        for m in (self.eta, self.mu, self.antipode):
            self.comonoid.field.require_same(m.field)
        _expect_shape("eta", self.eta, self.dim, 1)
        _expect_shape("mu", self.mu, self.dim, self.dim * self.dim)
        _expect_shape("antipode", self.antipode, self.dim, self.dim)

    @property
    def dim(self) -> int:
        return self.comonoid.dim

    @property
    def field(self) -> FieldSpec:
        return self.comonoid.field

    @property
    def delta(self) -> LinMap:
        return self.comonoid.delta

    @property
    def epsilon(self) -> LinMap:
        return self.comonoid.epsilon

    def monoid(self) -> MonoidData:
        return MonoidData(self.dim, self.eta, self.mu)

    def nonunital(self) -> NonUnitalBimonoidData:
        return NonUnitalBimonoidData(self.comonoid, self.mu)


# -- composite helpers -----------------------------------------------------


def double_coproduct(c: ComonoidData) -> LinMap:
    """Coproduct of the tensor-square comonoid: (id (x) swap (x) id) ∘ (delta (x) delta)."""
    n = c.dim
    mid = kron(kron(identity(c.field, n), swap(n, n, c.field)), identity(c.field, n))
    return mid @ kron(c.delta, c.delta)


def tensor_flip_middle(field: FieldSpec, a: int, b: int, c: int, d: int) -> LinMap:
    """id_a (x) swap(b, c) (x) id_d as one map."""
    return kron(kron(identity(field, a), swap(b, c, field)), identity(field, d))


# -- verifiers ---------------------------------------------------------------


def verify_comonoid(c: ComonoidData, subject: str = "comonoid") -> VerificationReport:
    n = c.dim
    idn = identity(c.field, n)
    checks = (
        equation("counit.left", "(epsilon(x)id)∘delta = id",
                 kron(c.epsilon, idn) @ c.delta, idn),
        equation("counit.right", "(id(x)epsilon)∘delta = id",
                 kron(idn, c.epsilon) @ c.delta, idn),
        equation("coassoc", "(delta(x)id)∘delta = (id(x)delta)∘delta",
                 kron(c.delta, idn) @ c.delta, kron(idn, c.delta) @ c.delta),
    )
    return VerificationReport(subject, checks)


def verify_monoid(m: MonoidData, subject: str = "monoid") -> VerificationReport:
    n = m.dim
    idn = identity(m.field, n)
    checks = (
        equation("unit.left", "mu∘(eta(x)id) = id", m.mu @ kron(m.eta, idn), idn),
        equation("unit.right", "mu∘(id(x)eta) = id", m.mu @ kron(idn, m.eta), idn),
        equation("assoc", "mu∘(mu(x)id) = mu∘(id(x)mu)",
                 m.mu @ kron(m.mu, idn), m.mu @ kron(idn, m.mu)),
    )
    return VerificationReport(subject, checks)


def verify_nonunital_bimonoid(b: NonUnitalBimonoidData, subject: str = "bimonoid") -> VerificationReport:
    n = b.dim
    idn = identity(b.field, n)
    rep = verify_comonoid(b.comonoid, subject)
    rep = rep.with_checks(
        equation("product.assoc", "mu∘(mu(x)id) = mu∘(id(x)mu)",
                 b.mu @ kron(b.mu, idn), b.mu @ kron(idn, b.mu)),
        equation("product.counit", "epsilon∘mu = epsilon(x)epsilon",
                 b.epsilon @ b.mu, kron(b.epsilon, b.epsilon)),
        equation("product.coproduct", "delta∘mu = (mu(x)mu)∘delta2",
                 b.delta @ b.mu, kron(b.mu, b.mu) @ double_coproduct(b.comonoid)),
    )
    return rep


def verify_hopf_monoid(h: HopfMonoidData, subject: str = "hopf") -> VerificationReport:
    n = h.dim
    one = identity(h.field, 1)
    rep = verify_nonunital_bimonoid(h.nonunital(), subject)
    unit_target = h.eta @ h.epsilon
    rep = rep.with_checks(
        equation("unit.left", "mu∘(eta(x)id) = id",
                 h.mu @ kron(h.eta, identity(h.field, n)), identity(h.field, n)),
        equation("unit.right", "mu∘(id(x)eta) = id",
                 h.mu @ kron(identity(h.field, n), h.eta), identity(h.field, n)),
        equation("unit.counit", "epsilon∘eta = id_K", h.epsilon @ h.eta, one),
        equation("unit.coproduct", "delta∘eta = eta(x)eta",
                 h.delta @ h.eta, kron(h.eta, h.eta)),
        equation("antipode.left", "mu∘(antipode(x)id)∘delta = eta∘epsilon",
                 h.mu @ kron(h.antipode, identity(h.field, n)) @ h.delta, unit_target),
        equation("antipode.right", "mu∘(id(x)antipode)∘delta = eta∘epsilon",
                 h.mu @ kron(identity(h.field, n), h.antipode) @ h.delta, unit_target),
    )
    return rep


def verify_structure(data) -> VerificationReport:
    """Dispatch to the verifier matching the bundle type."""
    if isinstance(data, ComonoidData):
        return verify_comonoid(data)
    if isinstance(data, MonoidData):
        return verify_monoid(data)
    if isinstance(data, NonUnitalBimonoidData):
        return verify_nonunital_bimonoid(data)
    if isinstance(data, HopfMonoidData):
        return verify_hopf_monoid(data)
    raise TypeError(f"no verifier for {type(data).__name__}")


def is_cocommutative(c: ComonoidData) -> bool:
    return swap(c.dim, c.dim, c.field) @ c.delta == c.delta


# -- convolution -------------------------------------------------------------


def convolution(f: LinMap, g: LinMap, source: ComonoidData, target: MonoidData) -> LinMap:
    """f * g = mu ∘ (f (x) g) ∘ delta."""
    if f.dom != source.dim or g.dom != source.dim:
        raise DimensionMismatchError("convolution operands must start at the comonoid")
    if f.cod != target.dim or g.cod != target.dim:
        raise DimensionMismatchError("convolution operands must land in the monoid")
    return target.mu @ kron(f, g) @ source.delta


def convolution_unit(source: ComonoidData, target: MonoidData) -> LinMap:
    return target.eta @ source.epsilon


def convolution_inverse(f: LinMap, source: ComonoidData, target: MonoidData) -> LinMap:
    """The two-sided convolution inverse of f, or NoAntipodeError.

    The two convolution equations are linear in the unknown map, so the
    inverse is found by one exact solve over the matrix entries; a
    consistent system forces the unique two-sided inverse.
    """
    nd, na = source.dim, target.dim
    field = f.field
    unit = convolution_unit(source, target)
    columns = []
    for i in range(na):
        for j in range(nd):
            basis = LinMap(field, na, nd, {(i, j): field.one})
            left = convolution(f, basis, source, target)
            right = convolution(basis, f, source, target)
            col = [left.entry(r, c) for r in range(na) for c in range(nd)]
            col += [right.entry(r, c) for r in range(na) for c in range(nd)]
            columns.append(col)
    rows = [[columns[k][r] for k in range(na * nd)] for r in range(2 * na * nd)]
    system = LinMap.from_rows(field, rows, dom=na * nd)
    target_vec = [[unit.entry(r, c)] for r in range(na) for c in range(nd)] * 2
    rhs = LinMap.from_rows(field, target_vec, dom=1)
    try:
        solution = solve_through(system, rhs)
    except InconsistentSystemError as exc:
        raise NoAntipodeError("no two-sided convolution inverse") from exc
    entries = {}
    for i in range(na):
        for j in range(nd):
            value = solution.entry(i * nd + j, 0)
            if not field.is_zero(value):
                entries[(i, j)] = value
    return LinMap(field, na, nd, entries)


def solve_antipode(b: NonUnitalBimonoidData, eta: LinMap) -> LinMap:
    """Convolution inverse of the identity for a unital bimonoid."""
    target = MonoidData(b.dim, eta, b.mu)
    return convolution_inverse(identity(b.field, b.dim), b.comonoid, target)


def to_hopf_monoid(b: NonUnitalBimonoidData, eta: LinMap) -> HopfMonoidData:
    """Promote a unital bimonoid to a Hopf monoid, solving for the antipode."""
    return HopfMonoidData(b.comonoid, eta, b.mu, solve_antipode(b, eta))


def find_unit(mu: LinMap) -> LinMap | None:
    """The unique two-sided unit of mu as a 1-column map, if one exists."""
    field = mu.field
    n = mu.cod
    if mu.dom != n * n:
        raise DimensionMismatchError("find_unit expects mu: dim^2 -> dim")
    rows = []
    rhs_rows = []
    one, zero = field.one, field.zero
    for r in range(n):
        for c in range(n):
            rows.append([mu.entry(r, k * n + c) for k in range(n)])
            rhs_rows.append([one if r == c else zero])
    for r in range(n):
        for c in range(n):
            rows.append([mu.entry(r, c * n + k) for k in range(n)])
            rhs_rows.append([one if r == c else zero])
    system = LinMap.from_rows(field, rows, dom=n)
    rhs = LinMap.from_rows(field, rhs_rows, dom=1)
    try:
        return solve_through(system, rhs)
    except (InconsistentSystemError, AmbiguousSystemError):
        return None


# -- grouplikes ---------------------------------------------------------------


def _is_basis_diagonal(c: ComonoidData) -> bool:
    # Every delta column must be exactly one tensor square e_k (x) e_k.
    n = c.dim
    one = c.field.one
    for j in range(n):
        col = [(i, v) for (i, jj), v in c.delta.items() if jj == j]
        if len(col) != 1:
            return False
        i, v = col[0]
        if v != one or i % (n + 1) != 0:
            return False
    return True


def grouplikes(c: ComonoidData, mode: str = GROUPLIKE_BASIS,
               max_candidates: int = 100_000) -> Tuple[List[LinMap], bool]:
    """Grouplike vectors g with delta(g) = g (x) g and epsilon(g) = 1.

    BasisScan checks basis vectors only and is complete exactly when
    delta is basis-diagonal; ExhaustiveFp enumerates every vector of a
    small prime-field comonoid and is always complete.
    """
    field = c.field
    n = c.dim
    if mode == GROUPLIKE_BASIS:
        found = []
        for j in range(n):
            v = LinMap.basis_vector(field, n, j)
            if c.delta @ v == kron(v, v) and c.epsilon @ v == identity(field, 1):
                found.append(v)
        return found, _is_basis_diagonal(c)
    if mode == GROUPLIKE_EXHAUSTIVE:
        if field.kind != PRIME_KIND:
            raise BoundExceededError("exhaustive scan needs a prime field")
        if field.p ** n > max_candidates:
            raise BoundExceededError(
                f"{field.p}^{n} candidate vectors exceed the bound {max_candidates}")
        found = []
        one = identity(field, 1)
        for coeffs in itertools.product(range(field.p), repeat=n):
            v = LinMap(field, n, 1, {(i, 0): a for i, a in enumerate(coeffs) if a})
            if c.epsilon @ v == one and c.delta @ v == kron(v, v):
                found.append(v)
        return found, True
    raise ValueError(f"unknown grouplike mode {mode!r}")


# -- tensor products -----------------------------------------------------------


def tensor_comonoid(x: ComonoidData, y: ComonoidData) -> ComonoidData:
    x.field.require_same(y.field)
    n, m = x.dim, y.dim
    delta = tensor_flip_middle(x.field, n, n, m, m) @ kron(x.delta, y.delta)
    return ComonoidData(n * m, delta, kron(x.epsilon, y.epsilon))


def tensor_monoid(x: MonoidData, y: MonoidData) -> MonoidData:
    x.field.require_same(y.field)
    n, m = x.dim, y.dim
    mu = kron(x.mu, y.mu) @ tensor_flip_middle(x.field, n, m, n, m)
    return MonoidData(n * m, kron(x.eta, y.eta), mu)


def tensor_structure(x, y):
    """Tensor product of two like bundles, with the symmetric braiding."""
    if isinstance(x, ComonoidData) and isinstance(y, ComonoidData):
        return tensor_comonoid(x, y)
    if isinstance(x, MonoidData) and isinstance(y, MonoidData):
        return tensor_monoid(x, y)
    if isinstance(x, NonUnitalBimonoidData) and isinstance(y, NonUnitalBimonoidData):
        com = tensor_comonoid(x.comonoid, y.comonoid)
        mu = kron(x.mu, y.mu) @ tensor_flip_middle(x.field, x.dim, y.dim, x.dim, y.dim)
        return NonUnitalBimonoidData(com, mu)
    if isinstance(x, HopfMonoidData) and isinstance(y, HopfMonoidData):
        com = tensor_comonoid(x.comonoid, y.comonoid)
        mu = kron(x.mu, y.mu) @ tensor_flip_middle(x.field, x.dim, y.dim, x.dim, y.dim)
        return HopfMonoidData(com, kron(x.eta, y.eta), mu,
                              kron(x.antipode, y.antipode))
    raise TypeError(f"cannot tensor {type(x).__name__} with {type(y).__name__}")
