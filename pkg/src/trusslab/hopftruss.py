"""Hopf trusses: one comonoid, a Hopf product, and a second product tied
to the first by a comonoid-endomorphism cocycle.

The carrier is a single based space with coproduct delta and counit
epsilon; mu1 (with unit eta and antipode) makes it a Hopf monoid, mu2 a
non-unital bimonoid, and the stored cocycle must equal mu2∘(id (x) eta).
The twisted action Gamma makes the Hopf part a module monoid over the
second product, which is the shape of the distributivity law.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coalgebra import (
    ComonoidData,
    HopfMonoidData,
    NonUnitalBimonoidData,
    find_unit,
    solve_antipode,
    verify_hopf_monoid,
    verify_nonunital_bimonoid,
)
from .errors import DimensionMismatchError, NoAntipodeError
from .fields import FieldSpec
from .linmap import LinMap, identity, kron, swap
from .report import VerificationReport, equation


@dataclass(frozen=True)
class HopfTruss:
    """Shared comonoid, Hopf product mu1, second product mu2, cocycle."""

    comonoid: ComonoidData
    eta: LinMap
    mu1: LinMap
    mu2: LinMap
    antipode: LinMap
    cocycle: LinMap

    def __post_init__(self) -> None:
        n = self.dim
        for name, m, cod, dom in (
            ("eta", self.eta, n, 1),
            ("mu1", self.mu1, n, n * n),
            ("mu2", self.mu2, n, n * n),
            ("antipode", self.antipode, n, n),
            ("cocycle", self.cocycle, n, n),
        ):
            self.comonoid.field.require_same(m.field)
            if m.shape != (cod, dom):
                raise DimensionMismatchError(
                    f"{name} has shape {m.shape}, expected {(cod, dom)}")

    @property
    def dim(self) -> int:
        return self.comonoid.dim

    @property
    def field(self) -> FieldSpec:
        return self.comonoid.field

    def hopf_part(self) -> HopfMonoidData:
        return HopfMonoidData(self.comonoid, self.eta, self.mu1, self.antipode)

    def second_part(self) -> NonUnitalBimonoidData:
        return NonUnitalBimonoidData(self.comonoid, self.mu2)


def derive_cocycle(mu2: LinMap, eta: LinMap) -> LinMap:
    """The cocycle forced by the axioms: mu2 ∘ (id (x) eta)."""
    n = mu2.cod
    return mu2 @ kron(identity(mu2.field, n), eta)


def twisted_action(h: HopfTruss) -> LinMap:
    """Gamma: H (x) H -> H, mu1∘((antipode∘cocycle) (x) mu2)∘(delta (x) id)."""
    n = h.dim
    idn = identity(h.field, n)
    lam_sigma = h.antipode @ h.cocycle
    return h.mu1 @ kron(lam_sigma, h.mu2) @ kron(h.comonoid.delta, idn)


def twisted_product(h: HopfTruss) -> LinMap:
    """Lambda: H (x) H -> H, mu1∘(mu2 (x) (antipode∘cocycle))∘(id (x) swap)∘(delta (x) id)."""
    n = h.dim
    idn = identity(h.field, n)
    lam_sigma = h.antipode @ h.cocycle
    inner = kron(idn, swap(n, n, h.field))
    return h.mu1 @ kron(h.mu2, lam_sigma) @ inner @ kron(h.comonoid.delta, idn)


def _distributivity_rhs(h: HopfTruss) -> LinMap:
    n = h.dim
    idn = identity(h.field, n)
    gamma = twisted_action(h)
    mid = kron(kron(idn, swap(n, n, h.field)), idn)
    return h.mu1 @ kron(h.mu2, gamma) @ mid @ kron(h.comonoid.delta, kron(idn, idn))


def verify_hopf_truss(h: HopfTruss) -> VerificationReport:
    """All defining laws of a Hopf truss as exact identities."""
    n = h.dim
    field = h.field
    idn = identity(field, n)
    delta, epsilon = h.comonoid.delta, h.comonoid.epsilon
    gamma = twisted_action(h)

    rep = VerificationReport("hopftruss")
    rep = rep.merged(verify_hopf_monoid(h.hopf_part()), prefix="h1.")
    rep = rep.merged(verify_nonunital_bimonoid(h.second_part()), prefix="h2.")

    mid = kron(kron(idn, swap(n, n, field)), idn)
    unit_absorb = h.eta @ epsilon
    rep = rep.with_checks(
        equation("cocycle.comonoid.coproduct", "delta∘cocycle = (cocycle(x)cocycle)∘delta",
                 delta @ h.cocycle, kron(h.cocycle, h.cocycle) @ delta),
        equation("cocycle.comonoid.counit", "epsilon∘cocycle = epsilon",
                 epsilon @ h.cocycle, epsilon),
        equation("compat.distributivity",
                 "mu2∘(id(x)mu1) = mu1∘(mu2(x)Gamma)∘(id(x)swap(x)id)∘(delta(x)id(x)id)",
                 h.mu2 @ kron(idn, h.mu1), _distributivity_rhs(h)),
        equation("cocycle.derived", "cocycle = mu2∘(id(x)eta)",
                 h.cocycle, derive_cocycle(h.mu2, h.eta)),
        equation("cocycle.product", "cocycle∘mu2 = mu2∘(id(x)cocycle)",
                 h.cocycle @ h.mu2, h.mu2 @ kron(idn, h.cocycle)),
        equation("action.unit", "Gamma∘(id(x)eta) = eta∘epsilon",
                 gamma @ kron(idn, h.eta), unit_absorb),
        equation("action.product",
                 "Gamma∘(id(x)mu1) = mu1∘(Gamma(x)Gamma)∘(id(x)swap(x)id)∘(delta(x)id(x)id)",
                 gamma @ kron(idn, h.mu1),
                 h.mu1 @ kron(gamma, gamma) @ mid @ kron(delta, kron(idn, idn))),
        equation("action.assoc", "Gamma∘(id(x)Gamma) = Gamma∘(mu2(x)id)",
                 gamma @ kron(idn, gamma), gamma @ kron(h.mu2, idn)),
    )
    return rep


def verify_truss_morphism(f: LinMap, src: HopfTruss, dst: HopfTruss) -> VerificationReport:
    """Morphism laws for f: src -> dst, plus the implied intertwines."""
    src.field.require_same(dst.field)
    if f.shape != (dst.dim, src.dim):
        raise DimensionMismatchError(
            f"morphism has shape {f.shape}, expected {(dst.dim, src.dim)}")
    ff = kron(f, f)
    checks = (
        equation("comonoid.coproduct", "delta'∘f = (f(x)f)∘delta",
                 dst.comonoid.delta @ f, ff @ src.comonoid.delta),
        equation("comonoid.counit", "epsilon'∘f = epsilon",
                 dst.comonoid.epsilon @ f, src.comonoid.epsilon),
        equation("h1.unit", "f∘eta = eta'", f @ src.eta, dst.eta),
        equation("h1.product", "f∘mu1 = mu1'∘(f(x)f)", f @ src.mu1, dst.mu1 @ ff),
        equation("h2.product", "f∘mu2 = mu2'∘(f(x)f)", f @ src.mu2, dst.mu2 @ ff),
        equation("implied.antipode", "f∘antipode = antipode'∘f",
                 f @ src.antipode, dst.antipode @ f),
        equation("implied.cocycle", "f∘cocycle = cocycle'∘f",
                 f @ src.cocycle, dst.cocycle @ f),
    )
    return VerificationReport("truss-morphism", checks)


def hopf_brace_antipode(h: HopfTruss) -> LinMap | None:
    """Second antipode when (eta, mu2) is unital Hopf; None otherwise.

    When eta is a two-sided unit for mu2 the derived cocycle law forces
    cocycle = id, which is the brace case.
    """
    unit = find_unit(h.mu2)
    if unit is None or unit != h.eta:
        return None
    try:
        return solve_antipode(h.second_part(), h.eta)
    except NoAntipodeError:
        return None
