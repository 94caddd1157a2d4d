"""Hopf modules, coinvariants, and the fundamental isomorphism.

A Hopf module carries an action and a coaction whose interplay copies
the bimonoid compatibility law. Its coinvariants are the kernel of
rho - eta (x) id, realized concretely: the idempotent q built from the
antipode projects onto them, splitting q gives the retraction, and
theta = act∘(id (x) inclusion) is then invertible with inverse built
from the retraction and the coaction. Over a Hopf truss the same
coinvariants must also equalize the two actions through the cocycle,
and induction from a plain space is adjoint (in fact inverse) to taking
coinvariants, which is the content of the two triangle checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coalgebra import ComonoidData, HopfMonoidData, tensor_flip_middle
from .errors import DimensionMismatchError, InvalidStructureError, TrussLabError
from .hopftruss import HopfTruss
from .linmap import LinMap, identity, kron, nullspace, solve_through, split_idempotent
from .modules import TrussModule, verify_truss_module
from .report import VerificationReport, condition, equation


@dataclass(frozen=True)
class ComoduleData:
    """Carrier with a coaction of a comonoid on the left."""

    comonoid: ComonoidData
    coaction: LinMap

    def __post_init__(self) -> None:
        self.comonoid.field.require_same(self.coaction.field)
        m = self.mdim
        expected = (self.comonoid.dim * m, m)
        if self.coaction.shape != expected:
            raise DimensionMismatchError(
                f"coaction has shape {self.coaction.shape}, expected {expected}")

    @property
    def mdim(self) -> int:
        return self.coaction.dom


@dataclass(frozen=True)
class HopfModuleData:
    """Module and comodule over one Hopf monoid, compatibly."""

    hopf: HopfMonoidData
    action: LinMap
    coaction: LinMap

    def __post_init__(self) -> None:
        n, m = self.hopf.dim, self.mdim
        for name, a, cod, dom in (
            ("action", self.action, m, n * m),
            ("coaction", self.coaction, n * m, m),
        ):
            self.hopf.field.require_same(a.field)
            if a.shape != (cod, dom):
                raise DimensionMismatchError(
                    f"{name} has shape {a.shape}, expected {(cod, dom)}")

    @property
    def mdim(self) -> int:
        return self.action.cod

    def comodule(self) -> ComoduleData:
        return ComoduleData(self.hopf.comonoid, self.coaction)


@dataclass(frozen=True)
class TrussHopfModule:
    """Truss module that is also a comodule, compatible with both products."""

    truss: HopfTruss
    act1: LinMap
    act2: LinMap
    coaction: LinMap

    def __post_init__(self) -> None:
        n, m = self.truss.dim, self.mdim
        for name, a, cod, dom in (
            ("act1", self.act1, m, n * m),
            ("act2", self.act2, m, n * m),
            ("coaction", self.coaction, n * m, m),
        ):
            self.truss.field.require_same(a.field)
            if a.shape != (cod, dom):
                raise DimensionMismatchError(
                    f"{name} has shape {a.shape}, expected {(cod, dom)}")

    @property
    def mdim(self) -> int:
        return self.act1.cod

    def hopf_module(self) -> HopfModuleData:
        return HopfModuleData(self.truss.hopf_part(), self.act1, self.coaction)


@dataclass(frozen=True)
class CoinvariantData:
    """The kernel of the coaction against the unit, with its retraction.

    inclusion embeds the coinvariants, retraction splits it off through
    the idempotent, and comparison identifies the canonical image basis
    of the idempotent with the kernel basis; its inverse is
    split_proj∘inclusion.
    """

    inclusion: LinMap
    retraction: LinMap
    idempotent: LinMap
    split_proj: LinMap
    split_incl: LinMap
    comparison: LinMap

    @property
    def codim(self) -> int:
        return self.inclusion.dom


def verify_comodule(c: ComoduleData) -> VerificationReport:
    n, m = c.comonoid.dim, c.mdim
    field = c.comonoid.field
    idm = identity(field, m)
    return VerificationReport("comodule").with_checks(
        equation("counit", "(epsilon (x) id)∘coaction = id",
                 kron(c.comonoid.epsilon, idm) @ c.coaction, idm),
        equation("coassoc", "(delta (x) id)∘coaction = (id (x) coaction)∘coaction",
                 kron(c.comonoid.delta, idm) @ c.coaction,
                 kron(identity(field, n), c.coaction) @ c.coaction),
    )


def verify_hopf_module(m: HopfModuleData) -> VerificationReport:
    """Action laws, coaction laws, and their compatibility, all exact."""
    h = m.hopf
    n, md = h.dim, m.mdim
    field = h.field
    idn, idm = identity(field, n), identity(field, md)
    rep = VerificationReport("hopfmodule").with_checks(
        equation("action.unit", "action∘(eta (x) id) = id",
                 m.action @ kron(h.eta, idm), idm),
        equation("action.product", "action∘(id (x) action) = action∘(mu (x) id)",
                 m.action @ kron(idn, m.action), m.action @ kron(h.mu, idm)),
    )
    rep = rep.merged(verify_comodule(m.comodule()), prefix="comodule.")
    flip = tensor_flip_middle(field, n, n, n, md)
    return rep.with_checks(
        equation("compat.coaction",
                 "coaction∘action = (mu (x) action)∘(id (x) swap (x) id)∘(delta (x) coaction)",
                 m.coaction @ m.action,
                 kron(h.mu, m.action) @ flip @ kron(h.comonoid.delta, m.coaction)),
    )


def _demand(ok: bool, label: str) -> None:
    if not ok:
        raise InvalidStructureError(f"coinvariant identity failed: {label}")


def coinvariants(m: HopfModuleData, point: LinMap | None = None) -> CoinvariantData:
    """Split off the subspace on which the coaction is the chosen point.

    The default point is the unit. Every identity listed on
    CoinvariantData is verified on the way out; a point other than the
    unit is accepted but the antipode idempotent is still the unit's,
    so the construction raises unless the two happen to agree.
    """
    rep = verify_hopf_module(m)
    if not rep.ok:
        raise InvalidStructureError("not a Hopf module", report=rep)
    h = m.hopf
    field = h.field
    idm = identity(field, m.mdim)
    if point is None:
        point = h.eta
    if point.shape != (h.dim, 1):
        raise DimensionMismatchError(
            f"point has shape {point.shape}, expected {(h.dim, 1)}")

    j = LinMap.from_columns(field, m.mdim,
                            nullspace(m.coaction - kron(point, idm)))
    q = m.action @ kron(h.antipode, idm) @ m.coaction
    _demand(q @ q == q, "idempotent squares to itself")
    _demand(m.coaction @ q == kron(point, q), "coaction is the point on the image")
    proj, incl = split_idempotent(q)
    t = solve_through(j, q)
    omega = t @ incl
    omega_inv = proj @ j
    _demand(omega @ omega_inv == identity(field, j.dom), "comparison inverts")
    _demand(omega_inv @ omega == identity(field, incl.dom), "comparison inverts")
    _demand(t @ j == identity(field, j.dom), "retraction splits the inclusion")
    _demand(t @ m.action == kron(h.comonoid.epsilon, t),
            "retraction kills the action")
    return CoinvariantData(j, t, q, proj, incl, omega)


def verify_truss_hopf_module(m: TrussHopfModule) -> VerificationReport:
    """Truss-module laws, Hopf-module laws over mu1, the mu2 compatibility,
    and the cocycle condition on coinvariants."""
    t = m.truss
    n, md = t.dim, m.mdim
    field = t.field
    idn = identity(field, n)
    rep = VerificationReport("trusshopfmodule")
    rep = rep.merged(verify_truss_module(TrussModule(t, m.act1, m.act2)),
                     prefix="module.")
    hopf_part = m.hopf_module()
    rep = rep.merged(verify_hopf_module(hopf_part), prefix="h1.")
    flip = tensor_flip_middle(field, n, n, n, md)
    rep = rep.with_checks(
        equation("h2.compat.coaction",
                 "coaction∘act2 = (mu2 (x) act2)∘(id (x) swap (x) id)∘(delta (x) coaction)",
                 m.coaction @ m.act2,
                 kron(t.mu2, m.act2) @ flip @ kron(t.comonoid.delta, m.coaction)),
    )
    try:
        j = coinvariants(hopf_part).inclusion
    except TrussLabError as err:
        return rep.with_checks(condition(
            "coinvariants.compat",
            "act1∘(cocycle (x) inclusion) = act2∘(id (x) inclusion)",
            False, f"coinvariants unavailable: {err}"))
    return rep.with_checks(
        equation("coinvariants.compat",
                 "act1∘(cocycle (x) inclusion) = act2∘(id (x) inclusion)",
                 m.act1 @ kron(t.cocycle, j), m.act2 @ kron(idn, j)),
    )


def fundamental_iso(m: TrussHopfModule) -> tuple[LinMap, LinMap, VerificationReport]:
    """The free module on the coinvariants, identified with m.

    Returns (theta, theta_inv, report); theta maps out of the free
    module, and the report certifies two-sided invertibility plus the
    three intertwine identities.
    """
    rep0 = verify_truss_hopf_module(m)
    if not rep0.ok:
        raise InvalidStructureError("not a Hopf module over the truss",
                                    report=rep0)
    t = m.truss
    n = t.dim
    field = t.field
    idn = identity(field, n)
    w = coinvariants(m.hopf_module())
    idw = identity(field, w.codim)
    theta = m.act1 @ kron(idn, w.inclusion)
    theta_inv = kron(idn, w.retraction) @ m.coaction
    rep = VerificationReport("fundamental").with_checks(
        equation("inverse.left", "theta∘theta_inv = id",
                 theta @ theta_inv, identity(field, m.mdim)),
        equation("inverse.right", "theta_inv∘theta = id",
                 theta_inv @ theta, identity(field, n * w.codim)),
        equation("intertwine.act1", "act1∘(id (x) theta) = theta∘(mu1 (x) id)",
                 m.act1 @ kron(idn, theta), theta @ kron(t.mu1, idw)),
        equation("intertwine.act2", "act2∘(id (x) theta) = theta∘(mu2 (x) id)",
                 m.act2 @ kron(idn, theta), theta @ kron(t.mu2, idw)),
        equation("intertwine.coaction",
                 "coaction∘theta = (id (x) theta)∘(delta (x) id)",
                 m.coaction @ theta,
                 kron(idn, theta) @ kron(t.comonoid.delta, idw)),
    )
    return theta, theta_inv, rep


def induction_functor(h: HopfTruss, xdim: int) -> TrussHopfModule:
    """Free Hopf module on an xdim-dimensional space."""
    if xdim < 0:
        raise DimensionMismatchError("xdim must be non-negative")
    idx = identity(h.field, xdim)
    return TrussHopfModule(h, kron(h.mu1, idx), kron(h.mu2, idx),
                           kron(h.comonoid.delta, idx))


def adjunction_check(h: HopfTruss, xdim: int,
                     m: TrussHopfModule) -> VerificationReport:
    """Triangle identities for induction against coinvariants.

    The unit of the adjunction is the identity, so the free module's
    coinvariants must literally be the given space, and the counit is
    the fundamental map theta.
    """
    n = h.dim
    field = h.field
    idn = identity(field, n)
    free = induction_functor(h, xdim)
    w_free = coinvariants(free.hopf_module())
    rep = VerificationReport("adjunction").with_checks(
        condition("induction.dimension",
                  "coinvariants of the free module have the inducing dimension",
                  w_free.codim == xdim,
                  f"got {w_free.codim}, expected {xdim}"),
        equation("induction.inclusion", "inclusion = eta (x) id",
                 w_free.inclusion, kron(h.eta, identity(field, xdim))),
        equation("triangle.free", "theta of the free module = id",
                 free.act1 @ kron(idn, w_free.inclusion),
                 identity(field, n * xdim)),
    )
    try:
        w = coinvariants(m.hopf_module())
    except TrussLabError as err:
        return rep.with_checks(condition(
            "counit.comodule", "coaction∘theta = (id (x) theta)∘(delta (x) id)",
            False, f"coinvariants unavailable: {err}"))
    theta = m.act1 @ kron(idn, w.inclusion)
    rep = rep.with_checks(
        equation("counit.comodule",
                 "coaction∘theta = (id (x) theta)∘(delta (x) id)",
                 m.coaction @ theta,
                 kron(idn, theta) @ kron(h.comonoid.delta,
                                         identity(field, w.codim))),
    )
    round_free = induction_functor(h, w.codim)
    w_round = coinvariants(round_free.hopf_module())
    if w_round.codim != w.codim:
        return rep.with_checks(condition(
            "triangle.coinvariants", "retraction∘theta∘inclusion = id",
            False, f"free coinvariants have dimension {w_round.codim}, "
                   f"expected {w.codim}"))
    return rep.with_checks(
        equation("triangle.coinvariants", "retraction∘theta∘inclusion = id",
                 w.retraction @ theta @ w_round.inclusion,
                 identity(field, w.codim)),
    )
