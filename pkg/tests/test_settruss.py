"""Set-level skew trusses: axioms, enumeration, linearization, grouplikes."""

import itertools

import pytest

from trusslab.errors import (
    BoundExceededError,
    ClosureError,
    DimensionMismatchError,
    IncompleteGrouplikesError,
    InvalidStructureError,
)
from trusslab.fields import RATIONALS, prime_field
from trusslab.hopftruss import HopfTruss, verify_hopf_truss
from trusslab.linmap import LinMap, identity, invert, kron
from trusslab.settruss import (
    FiniteGroup,
    FiniteSemigroup,
    SetMorphism,
    SkewTruss,
    canonical_form,
    cyclic_group,
    derive_omega,
    enumerate_skew_trusses,
    isomorphism_classes,
    left_projection_truss,
    linearize,
    right_projection_truss,
    symmetric_group,
    trivial_truss,
    truss_of_grouplikes,
    verify_set_morphism,
    verify_skew_truss,
)

F5 = prime_field(5)


def naive_enumerate(g):
    """Brute-force oracle: filter every candidate table by the raw axioms."""
    n = g.size
    t1 = g.table
    out = []
    for flat in itertools.product(range(n), repeat=n * n):
        t2 = [flat[a * n:(a + 1) * n] for a in range(n)]
        ok = True
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if t2[t2[a][b]][c] != t2[a][t2[b][c]]:
                        ok = False
        if not ok:
            continue
        omega = [t2[a][g.unit] for a in range(n)]
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    lhs = t2[a][t1[b][c]]
                    rhs = t1[t1[t2[a][b]][g.inv[omega[a]]]][t2[a][c]]
                    if lhs != rhs:
                        ok = False
        if ok:
            out.append(SkewTruss(g, FiniteSemigroup(t2), tuple(omega)))
    return out


# -- groups -------------------------------------------------------------------


def test_cyclic_group_tables():
    g = cyclic_group(4)
    assert g.unit == 0
    assert g.inv == (0, 3, 2, 1)
    assert g.table[3][2] == 1


def test_from_table_derives_unit_and_inverses():
    rows = [[1, 0], [0, 1]]  # Z2 written with unit at index 1
    g = FiniteGroup.from_table(rows)
    assert g.unit == 1
    assert g.inv == (0, 1)


def test_from_table_rejects_non_groups():
    with pytest.raises(InvalidStructureError):
        FiniteGroup.from_table([[0, 1], [0, 0]])  # not associative
    with pytest.raises(InvalidStructureError):
        FiniteGroup.from_table([[0, 0], [0, 0]])  # no unit
    with pytest.raises(InvalidStructureError):
        FiniteSemigroup.from_table([[0, 1], [0, 0]])


def test_symmetric_group_on_three_letters():
    g = symmetric_group(3)
    assert g.size == 6
    assert any(g.table[i][j] != g.table[j][i]
               for i in range(6) for j in range(6))
    # permutation order: identity first under lexicographic listing
    assert g.unit == 0


# -- axiom checking -----------------------------------------------------------


@pytest.mark.parametrize("build", [trivial_truss, left_projection_truss,
                                   right_projection_truss])
@pytest.mark.parametrize("group", [cyclic_group(2), cyclic_group(3),
                                   symmetric_group(3)])
def test_standard_trusses_pass(build, group):
    rep = verify_skew_truss(build(group))
    assert rep.ok, str(rep)


def test_non_associative_second_product_fails():
    g = cyclic_group(2)
    t = SkewTruss(g, FiniteSemigroup([[0, 1], [0, 0]]), (0, 0))
    rep = verify_skew_truss(t)
    assert not rep.named("semigroup.assoc").passed


def test_distributivity_failure_carries_a_witness():
    # every row equals the idempotent map (0,1,0): associative as a table,
    # but a single row of that shape is not translate-of-endomorphism
    g = cyclic_group(3)
    t2 = [[0, 1, 0]] * 3
    t = SkewTruss(g, FiniteSemigroup(t2), derive_omega(g, FiniteSemigroup(t2)))
    rep = verify_skew_truss(t)
    assert rep.named("semigroup.assoc").passed
    check = rep.named("compat.distributivity")
    assert not check.passed
    assert "(0, 1, 1)" in check.detail


def test_stored_omega_is_checked_against_derivation():
    g = cyclic_group(3)
    t = SkewTruss(g, FiniteSemigroup(g.table), (1, 0, 2))
    rep = verify_skew_truss(t)
    assert not rep.named("cocycle.derived").passed


def test_derive_omega_on_projections():
    g = cyclic_group(3)
    assert derive_omega(g, FiniteSemigroup(g.table)) == (0, 1, 2)
    assert derive_omega(g, trivial_truss(g).semigroup) == (0, 1, 2)
    assert derive_omega(g, left_projection_truss(g).semigroup) == (0, 1, 2)
    assert derive_omega(g, right_projection_truss(g).semigroup) == (0, 0, 0)


# -- morphisms ----------------------------------------------------------------


def test_identity_morphism_passes():
    t = trivial_truss(symmetric_group(3))
    rep = verify_set_morphism(SetMorphism(6, 6, tuple(range(6))), t, t)
    assert rep.ok


def test_collapse_to_point_passes():
    src = right_projection_truss(cyclic_group(3))
    dst = trivial_truss(cyclic_group(1))
    rep = verify_set_morphism(SetMorphism(3, 1, (0, 0, 0)), src, dst)
    assert rep.ok


def test_every_hom_pair_satisfies_the_cocycle_intertwine():
    # exhaustive over all maps Z2 -> Z2 and all enumerated trusses on both ends
    trusses = enumerate_skew_trusses(cyclic_group(2))
    for src in trusses:
        for dst in trusses:
            for mapping in itertools.product(range(2), repeat=2):
                rep = verify_set_morphism(SetMorphism(2, 2, mapping), src, dst)
                if rep.named("group.hom").passed and rep.named("semigroup.hom").passed:
                    assert rep.named("implied.cocycle").passed


def test_morphism_shape_mismatch_raises():
    t2 = trivial_truss(cyclic_group(2))
    t3 = trivial_truss(cyclic_group(3))
    with pytest.raises(DimensionMismatchError):
        verify_set_morphism(SetMorphism(2, 2, (0, 1)), t2, t3)


# -- enumeration --------------------------------------------------------------


def test_enumeration_on_z2_matches_oracle():
    g = cyclic_group(2)
    fast = enumerate_skew_trusses(g)
    slow = naive_enumerate(g)
    assert fast == slow
    assert len(fast) == 8


def test_enumeration_on_z3_matches_oracle():
    g = cyclic_group(3)
    fast = enumerate_skew_trusses(g)
    slow = naive_enumerate(g)
    assert fast == slow


def test_enumeration_output_is_lexicographic_and_valid():
    for n in (2, 3):
        trusses = enumerate_skew_trusses(cyclic_group(n))
        flats = [tuple(x for row in t.semigroup.table for x in row) for t in trusses]
        assert flats == sorted(flats)
        for t in trusses:
            assert verify_skew_truss(t).ok


def test_enumeration_contains_the_three_standard_trusses():
    g = cyclic_group(2)
    found = enumerate_skew_trusses(g)
    for t in (trivial_truss(g), left_projection_truss(g), right_projection_truss(g)):
        assert t in found


def test_enumeration_bound():
    with pytest.raises(BoundExceededError):
        enumerate_skew_trusses(symmetric_group(3))
    with pytest.raises(BoundExceededError):
        enumerate_skew_trusses(cyclic_group(3), max_size=2)


def test_enumeration_on_z4_smoke():
    g = cyclic_group(4)
    found = enumerate_skew_trusses(g)
    flats = [tuple(x for row in t.semigroup.table for x in row) for t in found]
    assert flats == sorted(flats)
    for t in found:
        assert verify_skew_truss(t).ok
    circle = FiniteSemigroup([[(a + b + 2 * a * b) % 4 for b in range(4)]
                              for a in range(4)])
    assert SkewTruss(g, circle, derive_omega(g, circle)) in found
    assert trivial_truss(g) in found


def test_isomorphism_classes_on_z2():
    # the only non-identity bijection of a 2-set does not fix the group
    # table, so no two trusses over the fixed cyclic table are isomorphic
    trusses = enumerate_skew_trusses(cyclic_group(2))
    classes = isomorphism_classes(trusses)
    assert sorted(len(c) for c in classes) == [1] * 8
    assert all(canonical_form(t) == canonical_form(c[0])
               for c in classes for t in c)


def test_canonical_form_identifies_relabeled_trusses():
    g = cyclic_group(2)
    relabeled = FiniteGroup.from_table([[1, 0], [0, 1]])
    a = trivial_truss(g)
    b = trivial_truss(relabeled)
    assert canonical_form(a) == canonical_form(b)
    assert a != b


# -- linearization ------------------------------------------------------------


@pytest.mark.parametrize("field", [RATIONALS, F5])
def test_linearize_trivial_truss_on_z2(field):
    h = linearize(trivial_truss(cyclic_group(2)), field)
    assert h.cocycle == identity(field, 2)
    assert verify_hopf_truss(h).ok


def test_linearize_right_projection_collapses_cocycle():
    h = linearize(right_projection_truss(cyclic_group(2)), RATIONALS)
    assert h.cocycle == LinMap(RATIONALS, 2, 2, {(0, 0): 1, (0, 1): 1})


@pytest.mark.parametrize("field", [RATIONALS, F5])
def test_every_enumerated_truss_linearizes_to_a_hopf_truss(field):
    for n in (2, 3):
        for t in enumerate_skew_trusses(cyclic_group(n)):
            rep = verify_hopf_truss(linearize(t, field))
            assert rep.ok, str(rep)


def test_linearized_cocycle_is_a_comonoid_morphism():
    for t in (trivial_truss(symmetric_group(3)),
              right_projection_truss(cyclic_group(3))):
        h = linearize(t, RATIONALS)
        assert h.comonoid.epsilon @ h.cocycle == h.comonoid.epsilon
        assert h.comonoid.delta @ h.cocycle == kron(h.cocycle, h.cocycle) @ h.comonoid.delta


def test_linearize_rejects_broken_trusses():
    g = cyclic_group(3)
    bad = SkewTruss(g, FiniteSemigroup(g.table), (1, 0, 2))
    with pytest.raises(InvalidStructureError) as exc:
        linearize(bad, RATIONALS)
    assert exc.value.report is not None
    assert not exc.value.report.ok


# -- grouplike restriction ----------------------------------------------------


@pytest.mark.parametrize("field", [RATIONALS, F5])
def test_roundtrip_is_the_identity_on_enumerated_trusses(field):
    for n in (2, 3):
        for t in enumerate_skew_trusses(cyclic_group(n)):
            assert truss_of_grouplikes(linearize(t, field)) == t


def test_roundtrip_on_symmetric_group_trusses():
    g = symmetric_group(3)
    for t in (trivial_truss(g), left_projection_truss(g)):
        assert truss_of_grouplikes(linearize(t, RATIONALS)) == t


def test_grouplikes_of_group_algebra_brace():
    t = truss_of_grouplikes(linearize(trivial_truss(cyclic_group(2)), RATIONALS))
    assert t == trivial_truss(cyclic_group(2))


def _transport(h: HopfTruss, p: LinMap) -> HopfTruss:
    """Conjugate every structure map by the isomorphism p."""
    from trusslab.coalgebra import ComonoidData

    q = invert(p)
    c = ComonoidData(h.dim,
                     kron(p, p) @ h.comonoid.delta @ q,
                     h.comonoid.epsilon @ q)
    return HopfTruss(c, p @ h.eta,
                     p @ h.mu1 @ kron(q, q),
                     p @ h.mu2 @ kron(q, q),
                     p @ h.antipode @ q,
                     p @ h.cocycle @ q)


def test_permutation_transport_recovers_relabeled_truss():
    h = linearize(trivial_truss(cyclic_group(2)), RATIONALS)
    flip = LinMap(RATIONALS, 2, 2, {(1, 0): 1, (0, 1): 1})
    recovered = truss_of_grouplikes(_transport(h, flip))
    assert recovered == trivial_truss(FiniteGroup.from_table([[1, 0], [0, 1]]))


def test_non_diagonal_coproduct_over_q_is_refused():
    h = linearize(trivial_truss(cyclic_group(2)), RATIONALS)
    p = LinMap.from_rows(RATIONALS, [[1, 1], [0, 1]])
    with pytest.raises(IncompleteGrouplikesError):
        truss_of_grouplikes(_transport(h, p))


def test_transported_truss_over_f5_recovered_up_to_relabeling():
    t = right_projection_truss(cyclic_group(2))
    h = linearize(t, F5)
    p = LinMap.from_rows(F5, [[1, 1], [0, 1]])
    moved = _transport(h, p)
    assert verify_hopf_truss(moved).ok
    recovered = truss_of_grouplikes(moved)
    assert verify_skew_truss(recovered).ok
    assert canonical_form(recovered) == canonical_form(t)


def test_closure_error_on_corrupted_product():
    h = linearize(trivial_truss(cyclic_group(2)), RATIONALS)
    bad_mu2 = LinMap(RATIONALS, 2, 4,
                     {(0, 0): 1, (1, 0): 1, (1, 1): 1, (0, 2): 1, (0, 3): 1})
    broken = HopfTruss(h.comonoid, h.eta, h.mu1, bad_mu2, h.antipode, h.cocycle)
    with pytest.raises(ClosureError):
        truss_of_grouplikes(broken)
