"""Structure checks for the built-in algebra constructors."""

import pytest
from hypothesis import given, settings, strategies as st

from semiab import (
    AlgebraError,
    cyclic_group,
    dihedral_group,
    element_order,
    find_isomorphism,
    gpd_discrete,
    gpd_indiscrete,
    gpd_one_object,
    is_normal_subset,
    quaternion_8,
    semidirect_product,
    split_witness_ring,
    subobject,
    symmetric_3,
    trivial_of_variety,
    zero_multiplication_ring,
    zmod_cyclic,
    zmod_free,
    zring,
)
from semiab.algebra import closure_under_ops


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=24))
def test_cyclic_group_orders(n):
    g = cyclic_group(n)
    assert g.order == n
    assert element_order(g, 1 % n) == n if n > 1 else True


def test_dihedral_involution_count():
    d4 = dihedral_group(4)
    assert d4.order == 8
    assert sum(1 for x in range(8) if element_order(d4, x) == 2) == 5


def test_quaternion_structure():
    q8 = quaternion_8()
    assert q8.order == 8
    assert sum(1 for x in range(8) if element_order(q8, x) == 2) == 1
    # every subgroup of Q8 is normal
    subgroups = set()
    for gens in [{x} for x in range(8)] + [{1, 2}, {1, 4}, {2, 4}]:
        subgroups.add(closure_under_ops(q8, gens))
    for s in subgroups:
        assert is_normal_subset(q8, s)


def test_d3_is_s3():
    assert find_isomorphism(dihedral_group(3), symmetric_3()) is not None


def test_zring_arithmetic():
    z6 = zring(6)
    assert z6.mul[2][3] == 0 and z6.mul[5][5] == 1
    assert z6.add[4][5] == 3


def test_zero_multiplication_ring():
    r = zero_multiplication_ring(5)
    assert all(r.mul[i][j] == 0 for i in range(5) for j in range(5))


def test_split_witness_ring_square():
    r = split_witness_ring()
    assert r.kind == "nonassoc-ring"
    assert r.mul[3][3] == 2  # the nontrivial idempotent-free square


def test_module_builders():
    m = zmod_cyclic(4, 2)
    assert m.order == 2 and m.variety.modulus == 4
    f = zmod_free(4, 1)
    assert f.order == 4
    assert find_isomorphism(zmod_cyclic(4, 4), f) is not None


def test_semidirect_builds_dihedral():
    c3, c2 = cyclic_group(3), cyclic_group(2)
    # invert the fibre on the nontrivial actor element
    act = [[0, 1, 2], [0, 2, 1]]
    g = semidirect_product(c3, c2, act)
    assert g.order == 6
    assert find_isomorphism(g, symmetric_3()) is not None


def test_trivial_of_variety_matches_kind():
    for a in (cyclic_group(5), zring(4), zmod_cyclic(4, 2)):
        t = trivial_of_variety(a.variety)
        assert t.order == 1 and t.variety == a.variety


def test_gpd_shapes():
    c3 = cyclic_group(3)
    disc = gpd_discrete(c3)
    assert disc.g0.order == 3 and disc.g1.order == 3
    indisc = gpd_indiscrete(c3)
    assert indisc.g1.order == 9
    one = gpd_one_object(cyclic_group(4))
    assert one.g0.order == 1 and one.g1.order == 4


def test_constructor_rejects_bad_sizes():
    with pytest.raises(AlgebraError):
        cyclic_group(0)
    with pytest.raises(AlgebraError):
        zmod_cyclic(4, 3)  # 3 does not divide 4
