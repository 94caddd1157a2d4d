"""Left modules over a Hopf truss and over an invertible cocycle.

A truss module is one carrier with two actions, a unital one for the
Hopf product and a plain one for the second product, tied by a twisted
distributivity law shaped exactly like the truss's own. A cocycle
module splits the two actions over the two ends of the comparison map:
the Hopf monoid acts on the main carrier, the bimonoid acts on a second
carrier identified with the first by an isomorphism.

The three functors here move modules between the two pictures:
restrict_along pulls a cocycle module back over a morphism of cocycles,
functor_G_H reads a truss module as a module over the identity cocycle
of its truss, and functor_H_tr_pi collapses a cocycle module onto the
transported truss. One composite is the identity on truss modules; the
other lands on an isomorphic cocycle module with comparison map id.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cocycle import (
    CocycleMorphism,
    InvertibleCocycle,
    cocycle_of_truss,
    truss_of_cocycle,
)
from .coalgebra import tensor_flip_middle
from .errors import (
    DimensionMismatchError,
    InvalidStructureError,
    NotInvertibleError,
)
from .hopftruss import HopfTruss, twisted_action, twisted_product
from .linmap import LinMap, identity, invert, kron
from .report import VerificationReport, condition, equation


@dataclass(frozen=True)
class TrussModule:
    """Carrier with a unital action of mu1 and a plain action of mu2."""

    truss: HopfTruss
    act1: LinMap
    act2: LinMap

    def __post_init__(self) -> None:
        n, m = self.truss.dim, self.mdim
        for name, a in (("act1", self.act1), ("act2", self.act2)):
            self.truss.field.require_same(a.field)
            if a.shape != (m, n * m):
                raise DimensionMismatchError(
                    f"{name} has shape {a.shape}, expected {(m, n * m)}")

    @property
    def mdim(self) -> int:
        return self.act1.cod


@dataclass(frozen=True)
class PiModule:
    """Module over an invertible cocycle: two carriers, three actions.

    hopf_action makes the main carrier a unital module over the Hopf
    monoid, base_action a non-unital module over the bimonoid on the
    second carrier, and mixed_action is the bimonoid acting on the main
    carrier through the cocycle data. compare identifies the carriers.
    """

    system: InvertibleCocycle
    mixed_action: LinMap
    hopf_action: LinMap
    base_action: LinMap
    compare: LinMap

    def __post_init__(self) -> None:
        b, h = self.system.bimonoid.dim, self.system.hopf.dim
        m, n = self.mdim, self.ndim
        for name, a, cod, dom in (
            ("mixed_action", self.mixed_action, m, b * m),
            ("hopf_action", self.hopf_action, m, h * m),
            ("base_action", self.base_action, n, b * n),
            ("compare", self.compare, m, n),
        ):
            self.system.field.require_same(a.field)
            if a.shape != (cod, dom):
                raise DimensionMismatchError(
                    f"{name} has shape {a.shape}, expected {(cod, dom)}")

    @property
    def mdim(self) -> int:
        return self.compare.cod

    @property
    def ndim(self) -> int:
        return self.compare.dom


def module_twisted_action(m: TrussModule) -> LinMap:
    """Gamma on the module: act1∘((antipode∘cocycle) (x) act2)∘(delta (x) id)."""
    t = m.truss
    lam_sigma = t.antipode @ t.cocycle
    return m.act1 @ kron(lam_sigma, m.act2) @ kron(
        t.comonoid.delta, identity(t.field, m.mdim))


def regular_truss_module(h: HopfTruss) -> TrussModule:
    """The truss acting on itself by both products."""
    return TrussModule(h, h.mu1, h.mu2)


def trivial_truss_module(h: HopfTruss) -> TrussModule:
    """The base field with both actions given by the counit."""
    eps = h.comonoid.epsilon
    return TrussModule(h, eps, eps)


def induction_truss_module(h: HopfTruss, xdim: int) -> TrussModule:
    """Free module on an xdim-dimensional space: both actions on the left leg."""
    idx = identity(h.field, xdim)
    return TrussModule(h, kron(h.mu1, idx), kron(h.mu2, idx))


def verify_truss_module(m: TrussModule) -> VerificationReport:
    """Both action laws, twisted distributivity, and its two derived forms."""
    t = m.truss
    n, md = t.dim, m.mdim
    field = t.field
    idn, idm = identity(field, n), identity(field, md)
    gamma_m = module_twisted_action(m)
    # shared right leg of the three mixed laws
    spread = tensor_flip_middle(field, n, n, n, md) @ kron(
        t.comonoid.delta, kron(idn, idm))
    return VerificationReport("trussmodule").with_checks(
        equation("act1.unit", "act1∘(eta (x) id) = id",
                 m.act1 @ kron(t.eta, idm), idm),
        equation("act1.product", "act1∘(id (x) act1) = act1∘(mu1 (x) id)",
                 m.act1 @ kron(idn, m.act1), m.act1 @ kron(t.mu1, idm)),
        equation("act2.product", "act2∘(id (x) act2) = act2∘(mu2 (x) id)",
                 m.act2 @ kron(idn, m.act2), m.act2 @ kron(t.mu2, idm)),
        equation("compat.distributivity",
                 "act2∘(id (x) act1) = act1∘(mu2 (x) GammaM)∘(id (x) swap (x) id)∘(delta (x) id (x) id)",
                 m.act2 @ kron(idn, m.act1),
                 m.act1 @ kron(t.mu2, gamma_m) @ spread),
        equation("compat.distributivity.alt",
                 "act2∘(id (x) act1) = act1∘(Lambda (x) act2)∘(id (x) swap (x) id)∘(delta (x) id (x) id)",
                 m.act2 @ kron(idn, m.act1),
                 m.act1 @ kron(twisted_product(t), m.act2) @ spread),
        equation("compat.derived",
                 "GammaM∘(id (x) act1) = act1∘(Gamma (x) GammaM)∘(id (x) swap (x) id)∘(delta (x) id (x) id)",
                 gamma_m @ kron(idn, m.act1),
                 m.act1 @ kron(twisted_action(t), gamma_m) @ spread),
    )


def regular_pi_module(c: InvertibleCocycle) -> PiModule:
    """The cocycle acting on itself: products as actions, the cocycle as compare."""
    return PiModule(c, c.action, c.hopf.mu, c.bimonoid.mu, c.cocycle)


def verify_pi_module(m: PiModule) -> VerificationReport:
    """All defining laws of a cocycle module plus the two derived identities."""
    c = m.system
    b, h = c.bimonoid.dim, c.hopf.dim
    md, nd = m.mdim, m.ndim
    field = c.field
    idb, idh = identity(field, b), identity(field, h)
    idm, idn = identity(field, md), identity(field, nd)
    delta_b = c.bimonoid.comonoid.delta
    through = c.cocycle @ c.twist

    rep = VerificationReport("pimodule").with_checks(
        equation("hopf-action.unit", "hopf_action∘(eta (x) id) = id",
                 m.hopf_action @ kron(c.hopf.eta, idm), idm),
        equation("hopf-action.product",
                 "hopf_action∘(id (x) hopf_action) = hopf_action∘(mu (x) id)",
                 m.hopf_action @ kron(idh, m.hopf_action),
                 m.hopf_action @ kron(c.hopf.mu, idm)),
        equation("base-action.product",
                 "base_action∘(id (x) base_action) = base_action∘(mu (x) id)",
                 m.base_action @ kron(idb, m.base_action),
                 m.base_action @ kron(c.bimonoid.mu, idn)),
        equation("compat.mixed",
                 "mixed∘(id (x) hopf_action) = hopf_action∘(action (x) mixed)∘(id (x) swap (x) id)∘(delta (x) id (x) id)",
                 m.mixed_action @ kron(idb, m.hopf_action),
                 m.hopf_action @ kron(c.action, m.mixed_action)
                 @ tensor_flip_middle(field, b, b, h, md)
                 @ kron(delta_b, kron(idh, idm))),
        equation("compare.intertwine",
                 "compare∘base_action = hopf_action∘((cocycle∘twist) (x) mixed)∘(delta (x) compare)",
                 m.compare @ m.base_action,
                 m.hopf_action @ kron(through, m.mixed_action)
                 @ kron(delta_b, m.compare)),
    )
    try:
        compare_inv = invert(m.compare)
    except NotInvertibleError:
        return rep.with_checks(condition(
            "compare.invertible", "compare map is an isomorphism",
            False, f"compare has shape {m.compare.shape} and is singular"))
    rep = rep.with_checks(condition(
        "compare.invertible", "compare map is an isomorphism", True))
    lam_through = c.hopf.antipode @ through
    return rep.with_checks(
        equation("derived.base",
                 "base_action = compare⁻¹∘hopf_action∘((cocycle∘twist) (x) mixed)∘(delta (x) compare)",
                 m.base_action,
                 compare_inv @ m.hopf_action @ kron(through, m.mixed_action)
                 @ kron(delta_b, m.compare)),
        equation("derived.mixed",
                 "mixed = hopf_action∘((antipode∘cocycle∘twist) (x) (compare∘base_action))∘(delta (x) compare⁻¹)",
                 m.mixed_action,
                 m.hopf_action @ kron(lam_through, m.compare @ m.base_action)
                 @ kron(delta_b, compare_inv)),
    )


def verify_pi_module_morphism(h: LinMap, l: LinMap, src: PiModule,
                              dst: PiModule) -> VerificationReport:
    """h between main carriers, l between second carriers, compare-compatible."""
    c = src.system
    b, hd = c.bimonoid.dim, c.hopf.dim
    if dst.system.bimonoid.dim != b or dst.system.hopf.dim != hd:
        raise DimensionMismatchError("modules live over differently sized systems")
    if h.shape != (dst.mdim, src.mdim) or l.shape != (dst.ndim, src.ndim):
        raise DimensionMismatchError(
            f"morphism shapes {h.shape}, {l.shape} do not match the carriers")
    field = c.field
    idb, idh = identity(field, b), identity(field, hd)
    rep = VerificationReport("pimodule-morphism").with_checks(
        equation("main.mixed", "h∘mixed = mixed'∘(id (x) h)",
                 h @ src.mixed_action, dst.mixed_action @ kron(idb, h)),
        equation("main.module", "h∘hopf_action = hopf_action'∘(id (x) h)",
                 h @ src.hopf_action, dst.hopf_action @ kron(idh, h)),
        equation("second.module", "l∘base_action = base_action'∘(id (x) l)",
                 l @ src.base_action, dst.base_action @ kron(idb, l)),
        equation("compat.compare", "h∘compare = compare'∘l",
                 h @ src.compare, dst.compare @ l),
    )
    try:
        determined = invert(dst.compare) @ h @ src.compare
    except NotInvertibleError:
        return rep.with_checks(condition(
            "compat.determined", "l = compare'⁻¹∘h∘compare",
            False, "target compare map is singular"))
    return rep.with_checks(
        equation("compat.determined", "l = compare'⁻¹∘h∘compare",
                 l, determined))


def restrict_along(fg: CocycleMorphism, source: InvertibleCocycle,
                   m: PiModule) -> PiModule:
    """Pull a module over the target of fg back to one over its source."""
    f, g = fg.source_map, fg.target_map
    field = source.field
    idm = identity(field, m.mdim)
    return PiModule(source,
                    m.mixed_action @ kron(f, idm),
                    m.hopf_action @ kron(g, idm),
                    m.base_action @ kron(f, identity(field, m.ndim)),
                    m.compare)


def functor_G_H(m: TrussModule) -> PiModule:
    """Read a truss module as a module over the truss's identity cocycle."""
    c = cocycle_of_truss(m.truss)
    return PiModule(c, module_twisted_action(m), m.act1, m.act2,
                    identity(m.truss.field, m.mdim))


def functor_H_tr_pi(m: PiModule) -> TrussModule:
    """Collapse a cocycle module onto the transported truss.

    The second action is the base action conjugated through compare and
    the comparison map of the system; the mixed action must agree with
    the resulting twisted action transported back, which pins the
    construction and is checked here.
    """
    c = m.system
    t = truss_of_cocycle(c)
    pi_inv = invert(c.cocycle)
    compare_inv = invert(m.compare)
    out = TrussModule(t, m.hopf_action,
                      m.compare @ m.base_action @ kron(pi_inv, compare_inv))
    transported = module_twisted_action(out)
    expected = m.mixed_action @ kron(pi_inv, identity(c.field, m.mdim))
    if transported != expected:
        raise InvalidStructureError(
            "twisted action of the output disagrees with the mixed action; "
            "the input does not satisfy the cocycle-module laws")
    return out
