"""Limits, colimits, the normal lattice and commutators."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from semiab import (
    AlgebraError,
    ExactSequence,
    classify_sequence,
    compose,
    cyclic_group,
    dihedral_group,
    direct_product,
    epi_kernel_factorisation,
    full_subobject,
    huq_commutator,
    identity_morphism,
    image,
    induced_on_quotient,
    into_pullback,
    is_injective,
    is_isomorphism_map,
    is_surjective,
    join_normal,
    kernel,
    meet_subobjects,
    morphism,
    normal_closure,
    normal_subobjects,
    power_subobject,
    pullback,
    quaternion_8,
    quotient,
    sub_algebra,
    subobject,
    surjections,
    symmetric_3,
    zero_subobject,
    zring,
)
from semiab.algebra import closure_under_ops
from semiab.ops import kernel_pair, preimage_subobject


def _mod_map(m, n):
    return morphism(cyclic_group(m), cyclic_group(n), [x % n for x in range(m)])


def test_kernel_of_mod_map():
    f = _mod_map(8, 2)
    k = kernel(f)
    assert k.elements == frozenset({0, 2, 4, 6})
    assert k.normal


def test_quotient_kernel_is_the_given_subobject():
    d4 = dihedral_group(4)
    for n in normal_subobjects(d4):
        q_alg, q = quotient(d4, n)
        assert kernel(q).elements == n.elements
        assert q_alg.order * len(n.elements) == d4.order


def test_quotient_rejects_nonnormal():
    s3 = symmetric_3()
    refl = subobject(s3, closure_under_ops(s3, {1}))
    assert not refl.normal
    with pytest.raises(AlgebraError):
        quotient(s3, refl)


def test_pullback_universal_property():
    c4, c2 = cyclic_group(4), cyclic_group(2)
    f, g = _mod_map(4, 2), _mod_map(4, 2)
    P, p1, p2 = pullback(f, g)
    assert compose(f, p1) == compose(g, p2)
    # fibre product of two 2:1 maps over C2 has order 8
    assert P.order == 8
    # mediating map from the diagonal cone
    u = identity_morphism(c4)
    h = into_pullback(P, p1, p2, u, u)
    assert compose(p1, h) == u and compose(p2, h) == u
    # mediator must be unique among morphisms with that cone property
    count = sum(
        1
        for m in _all_group_homs(c4, P)
        if compose(p1, m) == u and compose(p2, m) == u
    )
    assert count == 1


def _all_group_homs(A, B):
    from semiab import enumerate_homs

    return enumerate_homs(A, B)


def test_kernel_pair_order():
    f = _mod_map(4, 2)
    KP, q1, q2 = kernel_pair(f)
    assert KP.order == 8
    assert compose(f, q1) == compose(f, q2)


def test_cokernel_via_image():
    from semiab import cokernel

    c2, c4 = cyclic_group(2), cyclic_group(4)
    j = morphism(c2, c4, [0, 2])
    C, p = cokernel(j)
    assert C.order == 2
    assert compose(p, j).mapping == (0, 0)


def test_normal_closure_is_idempotent_and_monotone():
    s3 = symmetric_3()
    refl = closure_under_ops(s3, {1})
    nc = normal_closure(s3, refl)
    assert nc.elements == frozenset(range(6))  # reflections generate all of S3
    again = normal_closure(s3, nc.elements)
    assert again.elements == nc.elements


def test_join_meet_absorption_on_normal_lattice():
    d4 = dihedral_group(4)
    ns = normal_subobjects(d4)
    for m, n in itertools.product(ns, repeat=2):
        j = join_normal(d4, m, n)
        w = meet_subobjects(d4, m, n)
        assert meet_subobjects(d4, m, j).elements == m.elements
        assert join_normal(d4, m, w).elements == m.elements


def test_every_surjection_is_a_normal_epi():
    d4, c2 = dihedral_group(4), cyclic_group(2)
    for f in surjections(d4, c2):
        q_alg, q = quotient(d4, kernel(f))
        # f factors through its kernel quotient via an isomorphism
        iso = induced_on_quotient(q, f)
        assert is_isomorphism_map(iso)


def test_epi_kernel_factorisation_composes_back():
    q8, c2 = quaternion_8(), cyclic_group(2)
    for f in surjections(q8, c2):
        e, m = epi_kernel_factorisation(f)
        assert is_surjective(e) and is_injective(m)
        assert compose(m, e) == f


def test_image_of_nonsurjective_map():
    c2, c4 = cyclic_group(2), cyclic_group(4)
    j = morphism(c2, c4, [0, 2])
    im = image(j)
    assert im.elements == frozenset({0, 2})
    assert im.normal


def test_induced_on_quotient_requires_containment():
    c4 = cyclic_group(4)
    q_alg, q = quotient(c4, subobject(c4, {0, 2}))
    idm = identity_morphism(c4)
    with pytest.raises(AlgebraError):
        induced_on_quotient(q, idm)  # K[q] not inside K[id]


def _brute_commutator(A, H, K):
    # smallest normal subobject N with H,K commuting in A/N
    best = None
    for n in normal_subobjects(A):
        _, q = quotient(A, n)
        if _commute_in_image(q, H.elements, K.elements):
            if best is None or len(n.elements) < len(best.elements):
                best = n
    return best


def _commute_in_image(q, hs, ks):
    B = q.cod
    for h in hs:
        for k in ks:
            if B.op[q.mapping[h]][q.mapping[k]] != B.op[q.mapping[k]][q.mapping[h]]:
                return False
    return True


@pytest.mark.parametrize("maker", [symmetric_3, quaternion_8, lambda: dihedral_group(4)])
def test_huq_commutator_matches_brute_force(maker):
    A = maker()
    whole = full_subobject(A)
    got = huq_commutator(A, whole, whole)
    want = _brute_commutator(A, whole, whole)
    assert got.elements == want.elements


def test_derived_subgroup_oracles():
    s3 = symmetric_3()
    assert len(huq_commutator(s3, full_subobject(s3), full_subobject(s3)).elements) == 3
    q8 = quaternion_8()
    assert len(huq_commutator(q8, full_subobject(q8), full_subobject(q8)).elements) == 2
    d4 = dihedral_group(4)
    assert len(huq_commutator(d4, full_subobject(d4), full_subobject(d4)).elements) == 2


def test_commutator_with_zero_is_zero():
    s3 = symmetric_3()
    z = zero_subobject(s3)
    assert huq_commutator(s3, full_subobject(s3), z).elements == z.elements


def test_power_subobject_on_modules():
    from semiab import zmod_cyclic

    m4 = zmod_cyclic(4, 4)
    assert power_subobject(m4, 2).elements == frozenset({0, 2})
    assert power_subobject(m4, 4).elements == frozenset({0})


def test_preimage_subobject():
    f = _mod_map(8, 4)
    c4 = cyclic_group(4)
    back = preimage_subobject(f, subobject(c4, {0, 2}))
    assert back.elements == frozenset({0, 2, 4, 6})


def test_classify_sequence_split_and_nonsplit():
    s3, c2 = symmetric_3(), cyclic_group(2)
    (f,) = surjections(s3, c2)
    k_sub, incl = sub_algebra(s3, kernel(f))
    cls = classify_sequence(incl, f)
    assert cls.kind == "split-exact"
    assert cls.splitting is not None
    assert compose(f, cls.splitting) == identity_morphism(c2)

    c4 = cyclic_group(4)
    (g,) = surjections(c4, c2)
    k2, incl2 = sub_algebra(c4, kernel(g))
    cls2 = classify_sequence(incl2, g)
    assert cls2.kind == "exact"
    assert cls2.splitting is None


def test_classify_sequence_rejects_non_exact():
    c4, c2 = cyclic_group(4), cyclic_group(2)
    (g,) = surjections(c4, c2)
    wrong = morphism(c2, c4, [0, 2])
    # embeds exactly onto K[g], so still a short exact sequence
    assert classify_sequence(wrong, g).kind == "exact"
    assert classify_sequence(identity_morphism(c4), g).kind == "not-exact"
    with pytest.raises(AlgebraError):
        classify_sequence(g, g)  # endpoints do not compose


def test_exact_sequence_validation():
    c4, c2 = cyclic_group(4), cyclic_group(2)
    (g,) = surjections(c4, c2)
    _, incl = sub_algebra(c4, kernel(g))
    seq = ExactSequence(incl, g)
    assert seq.splitting is None
    with pytest.raises(AlgebraError):
        ExactSequence(g, g)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([2, 3, 4, 6, 8]), st.sampled_from([2, 3, 4]))
def test_product_projections_are_surjective(m, n):
    P, p1, p2 = direct_product(cyclic_group(m), cyclic_group(n))
    assert P.order == m * n
    assert is_surjective(p1) and is_surjective(p2)
    assert kernel(p1).elements & kernel(p2).elements == {0}
