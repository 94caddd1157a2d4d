"""Invertible cocycles and the truss equivalence."""

import pytest

from conftest import (
    cyclic_table,
    cyclic_truss,
    permute_cocycle_source,
    truss_from_tables,
)
from trusslab.coalgebra import ComonoidData, NonUnitalBimonoidData
from trusslab.cocycle import (
    CocycleMorphism,
    InvertibleCocycle,
    cocycle_of_truss,
    is_brace_case,
    roundtrip_report,
    truss_of_cocycle,
    verify_cocycle,
    verify_cocycle_morphism,
)
from trusslab.errors import DimensionMismatchError
from trusslab.fields import RATIONALS, prime_field
from trusslab.hopftruss import derive_cocycle, twisted_action
from trusslab.linmap import LinMap, identity, invert, kron
from trusslab.settruss import linearize, symmetric_group, trivial_truss

F5 = prime_field(5)


def z4_circle_truss(field):
    t2 = [[(a + b + 2 * a * b) % 4 for b in range(4)] for a in range(4)]
    return truss_from_tables(field, cyclic_table(4), t2)


def shifted_z2_truss(field):
    return truss_from_tables(field, cyclic_table(2), [[1, 0], [0, 1]])


def right_projection_truss(field, n):
    return truss_from_tables(field, cyclic_table(n), [list(range(n))] * n)


FIXTURE_TRUSSES = [
    lambda: cyclic_truss(RATIONALS, 2),
    lambda: cyclic_truss(F5, 3),
    lambda: z4_circle_truss(RATIONALS),
    lambda: shifted_z2_truss(RATIONALS),
    lambda: right_projection_truss(F5, 3),
    lambda: linearize(trivial_truss(symmetric_group(3)), F5),
]


def shear_source(c: InvertibleCocycle) -> InvertibleCocycle:
    """Transport the source along a non-permutation isomorphism."""
    n = c.bimonoid.dim
    entries = {(a, a): 1 for a in range(n)}
    entries[(0, n - 1)] = 1
    q = LinMap(c.field, n, n, entries)
    qi = invert(q)
    moved = NonUnitalBimonoidData(
        ComonoidData(n, kron(q, q) @ c.bimonoid.delta @ qi,
                     c.bimonoid.epsilon @ qi),
        q @ c.bimonoid.mu @ kron(qi, qi))
    return InvertibleCocycle(moved, c.hopf,
                             c.cocycle @ qi,
                             q @ c.twist @ qi,
                             c.action @ kron(qi, identity(c.field, c.hopf.dim)))


# -- reading a truss as a cocycle ---------------------------------------------


@pytest.mark.parametrize("make", FIXTURE_TRUSSES)
def test_cocycle_of_truss_passes_verifier(make):
    rep = verify_cocycle(cocycle_of_truss(make()))
    assert rep.ok, str(rep)


def test_cocycle_of_truss_has_identity_comparison_map():
    h = cyclic_truss(RATIONALS, 2)
    c = cocycle_of_truss(h)
    assert c.cocycle == identity(RATIONALS, 2)
    assert c.twist == h.cocycle
    assert c.action == twisted_action(h)


def test_brace_case_flags():
    assert is_brace_case(cocycle_of_truss(cyclic_truss(RATIONALS, 2)))
    assert is_brace_case(cocycle_of_truss(z4_circle_truss(RATIONALS)))
    # twisted: the shifted product has the wrong unit, projections have none
    assert not is_brace_case(cocycle_of_truss(shifted_z2_truss(RATIONALS)))
    assert not is_brace_case(cocycle_of_truss(right_projection_truss(F5, 3)))


# -- the two functors compose to the identity on trusses ----------------------


@pytest.mark.parametrize("make", FIXTURE_TRUSSES)
def test_roundtrip_on_trusses_is_exact(make):
    h = make()
    assert truss_of_cocycle(cocycle_of_truss(h)) == h


def test_transport_of_identity_cocycle_is_trivial():
    c = cocycle_of_truss(shifted_z2_truss(RATIONALS))
    t = truss_of_cocycle(c)
    assert t.mu2 == c.bimonoid.mu
    assert t.cocycle == c.twist


def test_constructed_cocycle_satisfies_derivation_law():
    c = permute_cocycle_source(cocycle_of_truss(z4_circle_truss(F5)), (1, 2, 3, 0))
    t = truss_of_cocycle(c)
    assert t.cocycle == derive_cocycle(t.mu2, t.eta)


# -- cocycles with a non-identity comparison map ------------------------------


@pytest.mark.parametrize("move", [
    lambda c: permute_cocycle_source(c, (1, 0)),
    shear_source,
])
def test_transported_source_still_verifies(move):
    c = move(cocycle_of_truss(shifted_z2_truss(F5)))
    assert c.cocycle != identity(F5, 2)
    rep = verify_cocycle(c)
    assert rep.ok, str(rep)


def test_source_relabeling_does_not_change_the_truss():
    h = linearize(trivial_truss(symmetric_group(3)), RATIONALS)
    c = cocycle_of_truss(h)
    moved = permute_cocycle_source(c, (2, 0, 1, 4, 3, 5))
    assert truss_of_cocycle(moved) == h


def test_shear_transport_keeps_brace_flag():
    c = shear_source(cocycle_of_truss(z4_circle_truss(RATIONALS)))
    assert is_brace_case(c)
    assert truss_of_cocycle(c) == z4_circle_truss(RATIONALS)


# -- morphisms ----------------------------------------------------------------


def test_identity_pair_is_a_morphism():
    c = cocycle_of_truss(z4_circle_truss(RATIONALS))
    m = CocycleMorphism(identity(RATIONALS, 4), identity(RATIONALS, 4))
    assert verify_cocycle_morphism(m, c, c).ok


def test_truss_morphism_doubles_as_cocycle_morphism():
    # x -> 2x on the circle truss, used on both components
    f = LinMap(RATIONALS, 4, 4, {((2 * a) % 4, a): 1 for a in range(4)})
    c = cocycle_of_truss(z4_circle_truss(RATIONALS))
    rep = verify_cocycle_morphism(CocycleMorphism(f, f), c, c)
    assert rep.ok, str(rep)


def test_comparison_pair_is_an_isomorphism_onto_the_rebuilt_cocycle():
    c = permute_cocycle_source(cocycle_of_truss(shifted_z2_truss(RATIONALS)), (1, 0))
    back = cocycle_of_truss(truss_of_cocycle(c))
    pair = CocycleMorphism(c.cocycle, identity(RATIONALS, 2))
    rep = verify_cocycle_morphism(pair, c, back)
    assert rep.ok, str(rep)


def test_morphism_shape_mismatch_raises():
    c2 = cocycle_of_truss(cyclic_truss(RATIONALS, 2))
    c3 = cocycle_of_truss(cyclic_truss(RATIONALS, 3))
    with pytest.raises(DimensionMismatchError):
        verify_cocycle_morphism(
            CocycleMorphism(identity(RATIONALS, 2), identity(RATIONALS, 2)),
            c2, c3)


# -- round-trip certification -------------------------------------------------


@pytest.mark.parametrize("make", FIXTURE_TRUSSES)
def test_roundtrip_report_passes_on_truss_cocycles(make):
    rep = roundtrip_report(cocycle_of_truss(make()))
    assert rep.ok, str(rep)


def test_roundtrip_report_passes_on_transported_cocycles():
    base = cocycle_of_truss(right_projection_truss(F5, 3))
    for c in (permute_cocycle_source(base, (2, 0, 1)), shear_source(base)):
        rep = roundtrip_report(c)
        assert rep.ok, str(rep)
        assert rep.named("roundtrip.action").passed


# -- broken inputs ------------------------------------------------------------


def test_perturbed_action_breaks_the_cocycle_equation():
    c = cocycle_of_truss(cyclic_truss(RATIONALS, 2))
    # add a counit-killing column bump: e0 - e1 into column (a=0, b=1)
    bump = LinMap(RATIONALS, 2, 4, {(0, 1): 1, (1, 1): -1})
    bad = InvertibleCocycle(c.bimonoid, c.hopf, c.cocycle, c.twist,
                            c.action + bump)
    rep = verify_cocycle(bad)
    assert not rep.named("compat.cocycle").passed
    # the bump avoided the unit column, so unitality of the action survives
    assert rep.named("action.unit").passed


def test_corrupted_twist_is_reported_by_roundtrip():
    c = cocycle_of_truss(cyclic_truss(RATIONALS, 2))
    bad = InvertibleCocycle(c.bimonoid, c.hopf, c.cocycle,
                            c.twist.scale(2), c.action)
    rep = roundtrip_report(bad)
    assert not rep.named("src.twist.comonoid.coproduct").passed
    assert not rep.named("src.compat.cocycle").passed
    assert not rep.named("roundtrip.action").passed


def test_wrong_shape_action_rejected():
    c = cocycle_of_truss(cyclic_truss(RATIONALS, 2))
    with pytest.raises(DimensionMismatchError):
        InvertibleCocycle(c.bimonoid, c.hopf, c.cocycle, c.twist,
                          identity(RATIONALS, 4))
