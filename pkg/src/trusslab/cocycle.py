"""Invertible cocycles from a non-unital bimonoid onto a Hopf monoid.

The data is a comonoid isomorphism pi: B -> H together with a comonoid
endomorphism of B (the twist) and an action of B on H, tied by

    pi∘mu_B = mu_H∘((pi∘twist) (x) action)∘(delta_B (x) pi).

Such a cocycle is the same thing as a Hopf truss carried by H:
cocycle_of_truss reads a truss as the identity cocycle from its second
product onto its Hopf part, truss_of_cocycle transports the source
product and twist along pi. The two directions compose to the identity
on trusses exactly; on cocycles they compose to an isomorphic cocycle,
which roundtrip_report certifies.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coalgebra import (
    HopfMonoidData,
    NonUnitalBimonoidData,
    find_unit,
    solve_antipode,
    verify_hopf_monoid,
    verify_nonunital_bimonoid,
)
from .errors import (
    DimensionMismatchError,
    InvalidStructureError,
    NoAntipodeError,
    NotInvertibleError,
)
from .hopftruss import HopfTruss, twisted_action, verify_hopf_truss
from .linmap import LinMap, identity, invert, kron, swap
from .report import VerificationReport, condition, equation


@dataclass(frozen=True)
class InvertibleCocycle:
    bimonoid: NonUnitalBimonoidData
    hopf: HopfMonoidData
    cocycle: LinMap
    twist: LinMap
    action: LinMap

    def __post_init__(self) -> None:
        self.bimonoid.field.require_same(self.hopf.field)
        b, h = self.bimonoid.dim, self.hopf.dim
        for name, m, cod, dom in (
            ("cocycle", self.cocycle, h, b),
            ("twist", self.twist, b, b),
            ("action", self.action, h, b * h),
        ):
            self.bimonoid.field.require_same(m.field)
            if m.shape != (cod, dom):
                raise DimensionMismatchError(
                    f"{name} has shape {m.shape}, expected {(cod, dom)}")

    @property
    def field(self):
        return self.bimonoid.field


@dataclass(frozen=True)
class CocycleMorphism:
    """Pair of maps: source_map between the bimonoids, target_map between
    the Hopf monoids."""

    source_map: LinMap
    target_map: LinMap


def _is_invertible(m: LinMap) -> bool:
    try:
        invert(m)
        return True
    except NotInvertibleError:
        return False


def verify_cocycle(c: InvertibleCocycle) -> VerificationReport:
    bdim, hdim = c.bimonoid.dim, c.hopf.dim
    field = c.field
    idb, idh = identity(field, bdim), identity(field, hdim)
    delta_b, eps_b = c.bimonoid.delta, c.bimonoid.epsilon
    delta_h, eps_h = c.hopf.delta, c.hopf.epsilon

    rep = VerificationReport("cocycle")
    rep = rep.merged(verify_nonunital_bimonoid(c.bimonoid), prefix="b.")
    rep = rep.merged(verify_hopf_monoid(c.hopf), prefix="h.")

    mid = kron(idb, kron(swap(bdim, hdim, field), idh))
    rep = rep.with_checks(
        equation("cocycle.comonoid.coproduct", "delta_H∘pi = (pi(x)pi)∘delta_B",
                 delta_h @ c.cocycle, kron(c.cocycle, c.cocycle) @ delta_b),
        equation("cocycle.comonoid.counit", "epsilon_H∘pi = epsilon_B",
                 eps_h @ c.cocycle, eps_b),
        condition("cocycle.invertible", "pi has a two-sided inverse",
                  _is_invertible(c.cocycle), "pi is singular"),
        equation("twist.comonoid.coproduct", "delta_B∘twist = (twist(x)twist)∘delta_B",
                 delta_b @ c.twist, kron(c.twist, c.twist) @ delta_b),
        equation("twist.comonoid.counit", "epsilon_B∘twist = epsilon_B",
                 eps_b @ c.twist, eps_b),
        equation("action.module", "phi∘(B(x)phi) = phi∘(mu_B(x)H)",
                 c.action @ kron(idb, c.action), c.action @ kron(c.bimonoid.mu, idh)),
        equation("action.unit", "phi∘(B(x)eta) = eta∘epsilon_B",
                 c.action @ kron(idb, c.hopf.eta), c.hopf.eta @ eps_b),
        equation("action.product",
                 "phi∘(B(x)mu_H) = mu_H∘(phi(x)phi)∘(B(x)swap(x)H)∘(delta_B(x)H(x)H)",
                 c.action @ kron(idb, c.hopf.mu),
                 c.hopf.mu @ kron(c.action, c.action) @ mid
                 @ kron(delta_b, kron(idh, idh))),
        equation("compat.cocycle",
                 "pi∘mu_B = mu_H∘((pi∘twist)(x)phi)∘(delta_B(x)pi)",
                 c.cocycle @ c.bimonoid.mu,
                 c.hopf.mu @ kron(c.cocycle @ c.twist, c.action)
                 @ kron(delta_b, c.cocycle)),
    )
    return rep


def is_brace_case(c: InvertibleCocycle) -> bool:
    """Whether this is a plain invertible 1-cocycle: identity twist,
    unital source with an antipode, unital action."""
    bdim, hdim = c.bimonoid.dim, c.hopf.dim
    if c.twist != identity(c.field, bdim):
        return False
    unit = find_unit(c.bimonoid.mu)
    if unit is None:
        return False
    try:
        solve_antipode(c.bimonoid, unit)
    except NoAntipodeError:
        return False
    return c.action @ kron(unit, identity(c.field, hdim)) == identity(c.field, hdim)


def cocycle_of_truss(h: HopfTruss) -> InvertibleCocycle:
    """Read a Hopf truss as the identity cocycle from its second product
    onto its Hopf part, twisted by the truss cocycle."""
    return InvertibleCocycle(
        h.second_part(), h.hopf_part(),
        identity(h.field, h.dim), h.cocycle, twisted_action(h))


def truss_of_cocycle(c: InvertibleCocycle) -> HopfTruss:
    """Transport the source product and twist along pi onto the target."""
    try:
        inv_pi = invert(c.cocycle)
    except NotInvertibleError as exc:
        raise InvalidStructureError("cocycle map is singular") from exc
    mu_pi = c.cocycle @ c.bimonoid.mu @ kron(inv_pi, inv_pi)
    sigma = c.cocycle @ c.twist @ inv_pi
    return HopfTruss(c.hopf.comonoid, c.hopf.eta, c.hopf.mu,
                     mu_pi, c.hopf.antipode, sigma)


def verify_cocycle_morphism(m: CocycleMorphism,
                            src: InvertibleCocycle,
                            dst: InvertibleCocycle) -> VerificationReport:
    src.field.require_same(dst.field)
    f, g = m.source_map, m.target_map
    if f.shape != (dst.bimonoid.dim, src.bimonoid.dim):
        raise DimensionMismatchError(
            f"source map has shape {f.shape}, expected "
            f"{(dst.bimonoid.dim, src.bimonoid.dim)}")
    if g.shape != (dst.hopf.dim, src.hopf.dim):
        raise DimensionMismatchError(
            f"target map has shape {g.shape}, expected "
            f"{(dst.hopf.dim, src.hopf.dim)}")
    ff, gg = kron(f, f), kron(g, g)
    checks = (
        equation("f.comonoid.coproduct", "delta'∘f = (f(x)f)∘delta",
                 dst.bimonoid.delta @ f, ff @ src.bimonoid.delta),
        equation("f.comonoid.counit", "epsilon'∘f = epsilon",
                 dst.bimonoid.epsilon @ f, src.bimonoid.epsilon),
        equation("f.product", "f∘mu_B = mu_B'∘(f(x)f)",
                 f @ src.bimonoid.mu, dst.bimonoid.mu @ ff),
        equation("g.comonoid.coproduct", "delta'∘g = (g(x)g)∘delta",
                 dst.hopf.delta @ g, gg @ src.hopf.delta),
        equation("g.comonoid.counit", "epsilon'∘g = epsilon",
                 dst.hopf.epsilon @ g, src.hopf.epsilon),
        equation("g.unit", "g∘eta = eta'", g @ src.hopf.eta, dst.hopf.eta),
        equation("g.product", "g∘mu_H = mu_H'∘(g(x)g)",
                 g @ src.hopf.mu, dst.hopf.mu @ gg),
        equation("g.implied.antipode", "g∘antipode = antipode'∘g",
                 g @ src.hopf.antipode, dst.hopf.antipode @ g),
        equation("compat.twist", "f∘twist = twist'∘f",
                 f @ src.twist, dst.twist @ f),
        equation("compat.cocycle", "g∘pi = pi'∘f",
                 g @ src.cocycle, dst.cocycle @ f),
        equation("compat.action", "g∘phi = phi'∘(f(x)g)",
                 g @ src.action, dst.action @ kron(f, g)),
    )
    return VerificationReport("cocycle-morphism", checks)


def roundtrip_report(c: InvertibleCocycle) -> VerificationReport:
    """Certify the equivalence on one object: the transported truss is
    valid, reading it back gives an isomorphic cocycle, and the
    comparison pair (pi, id) is that isomorphism."""
    rep = VerificationReport("cocycle-roundtrip")
    rep = rep.merged(verify_cocycle(c), prefix="src.")
    try:
        t = truss_of_cocycle(c)
    except InvalidStructureError:
        return rep.with_checks(condition(
            "roundtrip.transport", "pi is invertible", False,
            "cocycle map is singular, cannot transport"))
    rep = rep.merged(verify_hopf_truss(t), prefix="truss.")
    back = cocycle_of_truss(t)
    idh = identity(c.field, c.hopf.dim)
    pair = CocycleMorphism(c.cocycle, idh)
    rep = rep.merged(verify_cocycle_morphism(pair, c, back), prefix="unit-map.")
    rep = rep.with_checks(
        condition("unit-map.invertible", "both components are isomorphisms",
                  _is_invertible(c.cocycle), "pi is singular"),
        equation("roundtrip.action", "Gamma^(sigma_pi)∘(pi(x)id) = phi",
                 twisted_action(t) @ kron(c.cocycle, idh), c.action),
    )
    return rep
