from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from suborbit_lab import cayley, groups
from suborbit_lab.errors import (
    BadConstructorInput,
    BadTauInput,
    NotASubgroup,
    NotExtraspecialShape,
    NotProper,
    NotRegular,
    PreconditionRatio,
)
from suborbit_lab.perm import Permutation, PermGroup
from suborbit_lab.sampling import harness_pairs, holomorph_pair, small_groups

P = Permutation.from_cycles


@pytest.fixture(scope="module")
def pairs():
    return harness_pairs(0)


def brute_inverse_closed(table):
    n = table.order
    return sum(
        1
        for mask in range(1 << n)
        if all((mask >> table.inv[x]) & 1 == (mask >> x) & 1 for x in range(n))
    )


def test_c_of_r():
    assert cayley.c_of_R(groups.elementary_abelian(3)) == 8
    c4 = groups.cyclic(4)
    assert cayley.c_of_R(c4) == 3 and brute_inverse_closed(c4) == 8
    assert cayley.c_of_R(groups.quaternion()) == 5


@pytest.mark.parametrize("table", small_groups()[:12], ids=lambda t: t.name)
def test_c_of_r_against_brute_force(table):
    assert brute_inverse_closed(table) == 2 ** cayley.c_of_R(table)


def test_cayley_digraph():
    c4 = groups.cyclic(4)
    assert cayley.cayley_digraph(c4, []).arc_count == 0
    cycle = cayley.cayley_digraph(c4, {1, 3})
    assert cycle.is_graph and all(len(a) == 2 for a in cycle.arcs)
    assert cycle.arcs[0] == {1, 3}
    directed = cayley.cayley_digraph(c4, {1})
    assert not directed.is_graph
    assert [sorted(a) for a in directed.arcs] == [[1], [2], [3], [0]]


def test_regular_identification():
    c3 = P(3, (0, 1, 2))
    emb = cayley.regular_identification(PermGroup([c3]), [c3])
    assert emb.stabilizer.order == 1 and not emb.is_proper
    emb = cayley.regular_identification(PermGroup.symmetric(3), [c3])
    assert emb.stabilizer.order == 2 and emb.labeling[0] == 0
    emb = cayley.regular_identification(PermGroup.dihedral(4), [P(4, (0, 1, 2, 3))])
    assert emb.stabilizer.order == 2
    with pytest.raises(NotRegular):
        cayley.regular_identification(PermGroup.symmetric(4), [P(4, (0, 1))])
    with pytest.raises(NotASubgroup):
        cayley.regular_identification(PermGroup.cyclic(4), [P(4, (0, 1), (2, 3))])


def test_invariant_count_examples():
    emb = cayley.regular_identification(PermGroup.symmetric(3), [P(3, (0, 1, 2))])
    count = cayley.invariant_count(emb)
    assert count.kappa == 2
    assert cayley.count_invariant_subsets(3, [emb.inversion(), *emb.stabilizer_labels]) == 4
    c4 = groups.cyclic(4)
    emb = holomorph_pair(c4, [tuple(c4.inv)])
    count = cayley.invariant_count(emb)
    assert 2**count.kappa == 8 and count.case == "b"
    with pytest.raises(NotProper):
        cayley.invariant_count(cayley.regular_identification(PermGroup.cyclic(4), [P(4, (0, 1, 2, 3))]))


def test_graph_count_agrees_with_automorphism_test(pairs):
    # independent check: test every generator of G against the arcs directly
    for emb in pairs:
        if emb.degree <= 8:
            kappa = cayley.invariant_count(emb).kappa
            assert cayley.graphs_admitting(emb) == 2**kappa, emb.name


def test_tau_examples():
    c6 = cayley.tau_analysis(groups.cyclic(6), {0, 3}, 3)
    assert list(c6.fix.values()) == [6, 2, 2, 2]
    assert c6.kappa_orbits == 3 and c6.outcome_a and c6.passed
    c4 = cayley.tau_analysis(groups.cyclic(4), {0, 2}, 2)
    assert c4.outcome_c and not c4.outcome_a and c4.passed
    assert cayley.tau_map(groups.cyclic(4), frozenset([0, 2]), 2).images == tuple(groups.cyclic(4).inv)
    q8 = groups.quaternion()
    z = groups.unique_central_involution(q8)
    rep = cayley.tau_analysis(q8, q8.center(), z)
    assert len(rep.s_set) == 6 and rep.outcome_b and rep.passed


def test_tau_rejects_bad_input():
    c6 = groups.cyclic(6)
    with pytest.raises(BadTauInput):
        cayley.tau_analysis(c6, range(6), 3)
    with pytest.raises(BadTauInput):
        cayley.tau_analysis(c6, {0, 2, 4}, 3)
    with pytest.raises(BadTauInput):
        cayley.tau_analysis(c6, {0, 2, 4}, 2)
    with pytest.raises(BadTauInput):
        cayley.tau_analysis(c6, {0, 1}, 3)


@pytest.mark.parametrize(
    "family,t,ell,expected",
    [("D8chain", 1, 0, 2), ("Q8chain", 1, 0, 6), ("D8chain", 2, 0, 12), ("C4chain", 1, 0, 8), ("C4C2", 0, 2, 8)],
)
def test_s_set_examples(family, t, ell, expected):
    chk = cayley.s_set_formula_check(t, ell, family)
    assert chk["s_set"] == expected and chk["ok"]


def test_family_orders():
    assert cayley.family_group("D8chain", 2, 1)[0].order == 64
    assert cayley.family_group("C4chain", 1, 0)[0].order == 16
    with pytest.raises(BadConstructorInput):
        cayley.family_group("D8chain", 0, 0)
    with pytest.raises(BadConstructorInput):
        cayley.family_group("E8", 1, 0)


def test_quadratic_form_examples():
    assert cayley.quadratic_form_classify(groups.cyclic(4), 2).label() == "C4xC2^0"
    q8 = groups.quaternion()
    tag = cayley.quadratic_form_classify(q8, groups.unique_central_involution(q8))
    assert (tag.family, tag.t, tag.ell) == ("Q8chain", 1, 0)
    d8 = groups.dihedral(8)
    r = groups.unique_central_involution(d8) * 2
    tag = cayley.quadratic_form_classify(groups.direct_product(d8, groups.cyclic(2)), r)
    assert (tag.family, tag.t, tag.ell, tag.iso_checked) == ("D8chain", 1, 1, True)
    with pytest.raises(NotExtraspecialShape):
        cayley.quadratic_form_classify(groups.cyclic(8), 4)
    with pytest.raises(NotExtraspecialShape):
        cayley.quadratic_form_classify(groups.elementary_abelian(2), 1)


@pytest.mark.parametrize("family", cayley.FAMILIES)
@pytest.mark.parametrize("t", [1, 2])
@pytest.mark.parametrize("ell", [0, 1])
def test_quadratic_form_recovers_family(family, t, ell):
    if family == "C4C2":
        t = 0
    table, r = cayley.family_group(family, t, ell)
    tag = cayley.quadratic_form_classify(table, r)
    assert (tag.family, tag.t, tag.ell) == (family, t, ell)


def test_census_profile_examples():
    c5 = groups.cyclic(5)
    autos = [a for a in groups.automorphisms(c5) if list(a) != list(range(5))]
    emb = holomorph_pair(c5, autos)
    prof = cayley.census_profile(emb)
    assert prof.counts() == {"a": 1, "b": 0, "c": 0, "d": 0, "e": 0, "f": 4}
    assert prof.passed and all(prof.literal.values())
    with pytest.raises(PreconditionRatio):
        cayley.census_profile(cayley.regular_identification(PermGroup.symmetric(3), [P(3, (0, 1, 2))]))


def test_census_literal_orbit_claim_fails_on_sym4_over_c4():
    # G_1 = Sym(3) permutes g, g^2, g^3 together, so the non-involutions sit
    # in an orbit of size 3; the final bound still holds
    emb = cayley.regular_identification(PermGroup.symmetric(4), [P(4, (0, 1, 2, 3))])
    prof = cayley.census_profile(emb)
    assert prof.counts() == {"a": 1, "b": 0, "c": 0, "d": 0, "e": 1, "f": 2}
    assert prof.literal == {"f_orbits_at_least_4": False, "kappa_category_ledger": False}
    assert prof.passed and prof.checks["kappa_24"]


def test_harness_reports(pairs):
    for emb in pairs:
        rep = cayley.pair_report(emb)
        assert cayley.report_ok(rep), rep
        assert rep["case"] in ("a", "b", "c")


@settings(max_examples=40, deadline=None)
@given(st.lists(st.permutations(list(range(10))), min_size=0, max_size=3))
def test_subset_oracle_counts_orbits(images):
    perms = [Permutation(i) for i in images] or [Permutation.identity(10)]
    orbit_count = len(cayley.count_orbits(10, perms))
    assert cayley.count_invariant_subsets(10, perms) == 2**orbit_count
