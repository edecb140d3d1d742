from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from suborbit_lab.errors import ClosureCapExceeded, NotASubgroup, NotTransitive
from suborbit_lab.perm import (
    Permutation,
    PermGroup,
    centralizer,
    conjugacy_classes,
    generate_elements,
    is_block,
    is_transitive,
    normalizer,
    orbit,
    point_stabilizer,
)

P = Permutation.from_cycles


def perms(n: int):
    return st.permutations(list(range(n))).map(Permutation)


def test_product_acts_first_left_then_right():
    p, q = P(3, (0, 1)), P(3, (1, 2))
    # 0 -> 1 under p, then 1 -> 2 under q
    assert (p * q)(0) == 2
    assert (q * p)(0) == 1


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1, 2])


@given(perms(6), perms(6), perms(6))
def test_group_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a * a.inverse()).is_identity()
    assert a.conjugate(b) == b.inverse() * a * b


def test_generate_elements_examples():
    assert generate_elements([], 10, degree=3) == [Permutation.identity(3)]
    assert len(generate_elements([P(4, (0, 1, 2, 3))], 10)) == 4
    assert len(generate_elements([P(4, (0, 1)), P(4, (0, 1, 2, 3))], 100)) == 24


def test_closure_cap():
    with pytest.raises(ClosureCapExceeded):
        generate_elements([P(5, (0, 1)), P(5, (0, 1, 2, 3, 4))], 50)


def test_closure_cap_env(monkeypatch):
    monkeypatch.setenv("SUBORBIT_LAB_CLOSURE_CAP", "10")
    with pytest.raises(ClosureCapExceeded):
        PermGroup.symmetric(4).elements


def test_orbits_and_transitivity():
    assert orbit(PermGroup([], 5), 2) == {2}
    c4 = PermGroup.cyclic(4)
    assert orbit(c4, 0) == {0, 1, 2, 3}
    s4 = PermGroup.symmetric(4)
    assert orbit(point_stabilizer(s4, 0), 1) == {1, 2, 3}
    assert is_transitive(c4)
    assert not is_transitive(PermGroup([], 2))
    assert not is_transitive(PermGroup([P(4, (0, 1)), P(4, (2, 3))]))


def test_point_stabilizers():
    assert point_stabilizer(PermGroup.cyclic(4), 0).order == 1
    assert point_stabilizer(PermGroup.symmetric(3), 0).order == 2
    assert point_stabilizer(PermGroup.symmetric(4), 0).order == 6


def test_normalizer_and_centralizer():
    c5 = PermGroup.cyclic(5)
    sub = PermGroup([P(5, (0, 1, 2, 3, 4))])
    assert normalizer(c5, sub).order == 5
    s3 = PermGroup.symmetric(3)
    assert normalizer(s3, PermGroup([P(3, (0, 1))])).order == 2
    s4 = PermGroup.symmetric(4)
    v4 = PermGroup([P(4, (0, 1), (2, 3)), P(4, (0, 2), (1, 3))])
    assert normalizer(s4, v4).order == 24
    assert centralizer(s3, PermGroup([], 3)).order == 6
    assert centralizer(s3, s3).order == 1
    d4 = PermGroup.dihedral(4)
    assert centralizer(d4, d4).order == 2
    with pytest.raises(NotASubgroup):
        normalizer(PermGroup.cyclic(3), PermGroup([P(3, (0, 1))]))


def test_blocks():
    c4 = PermGroup.cyclic(4)
    assert is_block(c4, {1})
    assert is_block(c4, range(4))
    assert is_block(c4, {0, 2})
    assert not is_block(PermGroup.symmetric(4), {0, 1})
    with pytest.raises(NotTransitive):
        is_block(PermGroup([P(4, (0, 1))]), {0})


def test_conjugacy_classes():
    assert all(len(c) == 1 for c in conjugacy_classes(PermGroup.cyclic(5)))
    assert sorted(len(c) for c in conjugacy_classes(PermGroup.symmetric(3))) == [1, 2, 3]
    assert sorted(len(c) for c in conjugacy_classes(PermGroup.symmetric(4))) == [1, 3, 6, 6, 8]


@settings(max_examples=40, deadline=None)
@given(perms(5), perms(5))
def test_orbit_stabilizer(a, b):
    g = PermGroup([a, b])
    for p in range(5):
        assert len(orbit(g, p)) * point_stabilizer(g, p).order == g.order
