"""Reflector registry, radicals and torsion-theory certification."""

import pytest
from hypothesis import given, settings, strategies as st

from semiab import (
    Reflector,
    ReflectorError,
    compose,
    corpus_by_id,
    cyclic_group,
    dihedral_group,
    is_free_member,
    is_torsion_member,
    kernel,
    map_reflect,
    morphism,
    named_algebra,
    quaternion_8,
    radical,
    radical_algebra,
    reflect,
    reflector_by_id,
    split_exact_sequences,
    symmetric_3,
    torsion_theory_report,
    zring,
)
from semiab.reflectors import is_idempotent_radical, known_protoadditive_on, short_exact_sequences


def _rad_elems(rid, A):
    return radical(reflector_by_id(rid), A).elements


def test_reflector_registry_ids():
    for rid, kind, tt in [
        ("ab", "group", False),
        ("reduced", "comm-ring", True),
        ("zerorng", "rng-star", True),
        ("pi0", "gpd-in-group", True),
        ("burnside:2", "zmod-module", False),
        ("boole", "nonassoc-ring", False),
    ]:
        r = reflector_by_id(rid)
        assert kind in r.kinds
        assert r.torsion_theory == tt
    with pytest.raises(ReflectorError):
        reflector_by_id("nope")
    with pytest.raises(ReflectorError):
        reflector_by_id("burnside:0")


def test_composite_reflector_id_round_trip():
    r = reflector_by_id("composite:burnside:2∘ab")
    assert r.name == "composite:burnside:2∘ab"
    assert r.is_composite and r.kinds == ("group",)
    with pytest.raises(ReflectorError):
        reflector_by_id("composite:ab")  # missing inner factor


def test_abelianisation_radicals():
    assert _rad_elems("ab", symmetric_3()) == frozenset({0, 3, 4})
    assert len(_rad_elems("ab", quaternion_8())) == 2
    assert len(_rad_elems("ab", dihedral_group(4))) == 2
    assert _rad_elems("ab", cyclic_group(6)) == frozenset({0})


def test_reduced_radical_is_nilradical():
    assert _rad_elems("reduced", zring(12)) == frozenset({0, 6})
    assert _rad_elems("reduced", zring(8)) == frozenset({0, 2, 4, 6})
    assert _rad_elems("reduced", zring(6)) == frozenset({0})


def test_burnside_radical_on_modules():
    c4 = named_algebra("m4-c4")
    assert _rad_elems("burnside:2", c4) == frozenset({0, 2})
    c2 = named_algebra("m4-c2")
    assert _rad_elems("burnside:2", c2) == frozenset({0})


def test_reflect_decomposition_shape():
    r = reflector_by_id("ab")
    s3 = symmetric_3()
    dec = reflect(r, s3)
    assert dec.radical_part.elements == frozenset({0, 3, 4})
    assert dec.reflection.order == 2
    assert dec.unit.dom == s3 and dec.unit.cod == dec.reflection
    assert kernel(dec.unit).elements == dec.radical_part.elements


def test_reflection_is_idempotent():
    for rid, name in [("ab", "d4"), ("reduced", "z12"), ("burnside:2", "m4-c4")]:
        r = reflector_by_id(rid)
        A = named_algebra(name)
        once = reflect(r, A).reflection
        twice = reflect(r, once).reflection
        assert twice == once
        assert radical(r, once).elements == frozenset({0})


def test_membership_predicates():
    ab = reflector_by_id("ab")
    assert is_free_member(ab, cyclic_group(6))
    assert not is_free_member(ab, symmetric_3())
    red = reflector_by_id("reduced")
    from semiab import zero_multiplication_ring

    nil = zero_multiplication_ring(4, kind="comm-ring")
    assert is_torsion_member(red, nil)
    assert not is_torsion_member(red, zring(6))


def test_map_reflect_functoriality():
    ab = reflector_by_id("ab")
    s3, c2 = symmetric_3(), cyclic_group(2)
    from semiab import surjections

    (f,) = surjections(s3, c2)
    Ff = map_reflect(ab, f)
    assert Ff.dom == reflect(ab, s3).reflection
    assert Ff.cod == reflect(ab, c2).reflection
    # naturality: unit . f = Ff . unit
    assert compose(Ff, reflect(ab, s3).unit) == compose(reflect(ab, c2).unit, f)


def test_radical_algebra_is_the_kernel_algebra():
    red = reflector_by_id("reduced")
    ra = radical_algebra(red, zring(8))
    assert ra.order == 4


def test_split_sequence_count_for_rings_corpus():
    corpus = corpus_by_id("rings")
    seqs = split_exact_sequences(corpus)
    assert len(seqs) == 41
    shorts = short_exact_sequences(corpus)
    assert len(shorts) >= len(seqs)
    for s in seqs:
        assert s.splitting is not None
        assert compose(s.f, s.splitting).mapping == tuple(range(s.f.cod.order))


def test_torsion_theory_report_verdicts():
    red = reflector_by_id("reduced")
    rep = torsion_theory_report(red, corpus_by_id("rings"))
    assert rep.passed
    b2 = reflector_by_id("burnside:2")
    rep2 = torsion_theory_report(b2, corpus_by_id("zmod4-modules"))
    assert not rep2.passed
    assert rep2.witnesses


def test_idempotent_radical_check():
    red = reflector_by_id("reduced")
    rep = is_idempotent_radical(red, corpus_by_id("rings"))
    assert rep.passed
    b2 = reflector_by_id("burnside:2")
    rep2 = is_idempotent_radical(b2, corpus_by_id("zmod4-modules"))
    assert not rep2.passed


def test_known_protoadditive_table():
    assert known_protoadditive_on(reflector_by_id("reduced"), "comm-ring")
    assert known_protoadditive_on(reflector_by_id("pi0"), "gpd-in-group")
    assert not known_protoadditive_on(reflector_by_id("ab"), "group")


def test_reflector_rejects_wrong_kind():
    ab = reflector_by_id("ab")
    with pytest.raises(ReflectorError):
        radical(ab, zring(4))


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["c2", "c4", "c6", "c8", "d4", "q8", "s3", "d6"]))
def test_radical_is_normal_and_kernel_of_unit(name):
    ab = reflector_by_id("ab")
    A = named_algebra(name)
    dec = reflect(ab, A)
    assert dec.radical_part.normal
    assert kernel(dec.unit).elements == dec.radical_part.elements
