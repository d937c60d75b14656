"""JSON round trips and format diagnostics."""

import json

import pytest
from hypothesis import given, settings, strategies as st

from semiab import (
    FormatError,
    algebra_from_doc,
    algebra_to_doc,
    corpus_from_doc,
    corpus_to_doc,
    cube_from_doc,
    cube_to_doc,
    cyclic_group,
    dihedral_group,
    gpd_indiscrete,
    identity_morphism,
    morphism,
    morphism_from_doc,
    morphism_to_doc,
    named_algebra,
    quaternion_8,
    split_witness_ring,
    square,
    subobject,
    symmetric_3,
    zmod_cyclic,
    zring,
)
from semiab.serialize import subobject_to_doc, variety_from_doc, variety_to_doc


SAMPLES = [
    cyclic_group(1),
    cyclic_group(6),
    dihedral_group(4),
    quaternion_8(),
    zring(4),
    split_witness_ring(),
    zmod_cyclic(8, 4),
    gpd_indiscrete(cyclic_group(2)),
]


@pytest.mark.parametrize("A", SAMPLES, ids=lambda a: a.name or a.kind)
def test_algebra_round_trip(A):
    doc = algebra_to_doc(A)
    assert doc["format"] == "semiab-algebra" and doc["version"] == 1
    back = algebra_from_doc(json.loads(json.dumps(doc)))
    assert back == A


def test_variety_round_trip():
    for A in SAMPLES:
        assert variety_from_doc(variety_to_doc(A.variety), "$") == A.variety


def test_morphism_round_trip_inline():
    c8, c2 = cyclic_group(8), cyclic_group(2)
    f = morphism(c8, c2, [x % 2 for x in range(8)])
    doc = morphism_to_doc(f)
    assert doc["format"] == "semiab-morphism"
    assert morphism_from_doc(json.loads(json.dumps(doc))) == f


def test_morphism_round_trip_named_endpoints():
    c4 = named_algebra("c4")
    f = identity_morphism(c4)
    doc = morphism_to_doc(f, named_endpoints=True)
    assert doc["dom"] == c4.name
    back = morphism_from_doc(doc, resolve=named_algebra)
    assert back == f
    with pytest.raises(FormatError):
        morphism_from_doc(doc)  # names need a resolver


def test_gpd_morphism_round_trip():
    G = gpd_indiscrete(cyclic_group(2))
    f = identity_morphism(G)
    doc = morphism_to_doc(f)
    assert morphism_from_doc(doc) == f


def test_cube_round_trip():
    c4, c2 = cyclic_group(4), cyclic_group(2)
    f = morphism(c4, c2, [x % 2 for x in range(4)])
    sq = square(f, f, identity_morphism(c2), identity_morphism(c2))
    doc = cube_to_doc(sq)
    assert doc["format"] == "semiab-cube" and doc["dim"] == 2
    back = cube_from_doc(json.loads(json.dumps(doc)))
    assert back.dim == 2
    assert back.edge(0, 0) == f
    assert back.vertex(3) == c2


def test_corpus_round_trip():
    algebras = (cyclic_group(3), zring(2))
    doc = corpus_to_doc(algebras)
    assert doc["format"] == "semiab-corpus"
    back = corpus_from_doc(json.loads(json.dumps(doc)))
    assert tuple(back) == algebras


def test_subobject_doc_is_sorted_elements():
    d4 = dihedral_group(4)
    s = subobject(d4, {0, 2})
    assert subobject_to_doc(s) == [0, 2]


def test_format_errors_carry_paths():
    with pytest.raises(FormatError) as exc:
        algebra_from_doc({"format": "semiab-algebra", "version": 1})
    assert "$" in str(exc.value)

    good = algebra_to_doc(cyclic_group(4))
    bad = json.loads(json.dumps(good))
    bad["tables"]["op"] = [[0, 1], [1, 0]]
    with pytest.raises(FormatError) as exc:
        algebra_from_doc(bad)
    assert "tables" in str(exc.value)

    with pytest.raises(FormatError):
        algebra_from_doc({"format": "wrong", "version": 1})
    with pytest.raises(FormatError):
        algebra_from_doc(dict(good, version=99))
    with pytest.raises(FormatError):
        algebra_from_doc([])


def test_format_error_str_shape():
    e = FormatError("$.op", "not a table")
    assert str(e) == "$.op: not a table"
    assert e.path == "$.op"


def test_invalid_table_reported_as_format_error():
    doc = json.loads(json.dumps(algebra_to_doc(cyclic_group(4))))
    doc["tables"]["op"] = [[0, 0, 0, 0]] * 4  # not a group table
    with pytest.raises(FormatError):
        algebra_from_doc(doc)


def test_morphism_doc_with_mismatched_map_length():
    c4, c2 = cyclic_group(4), cyclic_group(2)
    f = morphism(c4, c2, [x % 2 for x in range(4)])
    doc = morphism_to_doc(f)
    doc["map"] = [0, 1]
    with pytest.raises(FormatError):
        morphism_from_doc(doc)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=12))
def test_cyclic_round_trip_any_order(n):
    A = cyclic_group(n)
    assert algebra_from_doc(algebra_to_doc(A)) == A
