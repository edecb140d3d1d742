from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from suborbit_lab import gf2, gl42, groups
from suborbit_lab.errors import BadConstructorInput, OrderTooLarge
from suborbit_lab.perm import PermGroup, is_transitive


def test_from_regular_action():
    c2 = groups.from_regular_action(PermGroup.cyclic(2))
    assert c2.order == 2 and c2.mul[1][1] == 0
    c4 = groups.from_regular_action(PermGroup.cyclic(4))
    assert c4.is_abelian() and c4.exponent() == 4
    s3 = groups.from_regular_action(PermGroup.symmetric(3))
    assert s3.order == 6 and not s3.is_abelian()


def test_standard_constructors():
    assert groups.build_standard("cyclic", 1).order == 1
    q8 = groups.generalized_dicyclic(groups.cyclic(4), 2)
    assert q8.order == 8 and len(groups.involution_set(q8)) == 2
    q8.validate()
    d8 = groups.dihedral(8)
    z = groups.unique_central_involution(d8)
    dd = groups.central_product(d8, d8, z, z)
    assert dd.order == 32
    dd.validate()
    assert len(dd.center()) == 2
    with pytest.raises(BadConstructorInput):
        groups.build_standard("nonsense", 3)
    with pytest.raises(BadConstructorInput):
        groups.generalized_dicyclic(groups.elementary_abelian(2), 1)
    with pytest.raises(BadConstructorInput):
        groups.central_product(d8, d8, 1, z)


@pytest.mark.parametrize(
    "table",
    [groups.cyclic(6), groups.dihedral(12), groups.quaternion(), groups.direct_product(groups.cyclic(4), groups.cyclic(2))],
)
def test_tables_are_groups(table):
    table.validate()


def test_involution_sets():
    assert groups.involution_set(groups.cyclic(3)) == {0}
    assert len(groups.involution_set(groups.elementary_abelian(3))) == 8
    assert len(groups.involution_set(groups.quaternion())) == 2


def test_generalized_dicyclic_recognition():
    ok, (a, y, x) = groups.is_generalized_dicyclic(groups.quaternion())
    assert ok and len(a) == 4
    assert not groups.is_generalized_dicyclic(groups.direct_product(groups.cyclic(4), groups.cyclic(2)))[0]
    assert groups.is_generalized_dicyclic(groups.generalized_dicyclic(groups.cyclic(6), 3))[0]
    assert not groups.is_generalized_dicyclic(groups.dihedral(8))[0]


def test_isomorphism():
    q8 = groups.quaternion()
    assert groups.brute_isomorphic(q8, q8)
    assert not groups.brute_isomorphic(groups.cyclic(4), groups.elementary_abelian(2))
    assert not groups.brute_isomorphic(q8, groups.dihedral(8))
    a4 = groups.from_regular_action(PermGroup.alternating(4))
    h12, _ = gl42.extremal_matrix_groups()
    assert groups.brute_isomorphic(gl42.matrix_group_table(h12), a4)
    with pytest.raises(OrderTooLarge):
        groups.brute_isomorphic(groups.cyclic(70), groups.cyclic(70))


def test_semidirect_and_coset_action():
    v = groups.semidirect_v_h([gf2.IDENTITY])
    assert groups.brute_isomorphic(v, groups.elementary_abelian(4))
    h12, h24 = gl42.extremal_matrix_groups()
    assert groups.semidirect_v_h(sorted(h12)).order == 192
    assert groups.semidirect_v_h(sorted(h24)).order == 384
    g, table = gl42.extremal_permutation_group(h12)
    assert g.degree == 48 and g.order == 192 and is_transitive(g)
    c6 = groups.cyclic(6)
    assert groups.coset_action(c6, range(6)).degree == 1
    reg = groups.coset_action(c6, [0])
    assert reg.degree == 6 and reg.order == 6


def test_automorphism_counts():
    assert len(groups.automorphisms(groups.cyclic(5))) == 4
    assert len(groups.automorphisms(groups.elementary_abelian(2))) == 6
    assert len(groups.automorphisms(groups.quaternion())) == 24
    assert len(groups.automorphisms(groups.dihedral(8))) == 8


def test_quotient():
    d8 = groups.dihedral(8)
    z = groups.unique_central_involution(d8)
    bar, coset = groups.quotient(d8, frozenset([0, z]))
    assert bar.order == 4 and bar.exponent() == 2
    assert len(coset) == 8


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 12), st.integers(1, 12))
def test_direct_product_orders(m, n):
    t = groups.direct_product(groups.cyclic(m), groups.cyclic(n))
    assert t.order == m * n
    from math import lcm

    assert t.exponent() == lcm(m, n)
