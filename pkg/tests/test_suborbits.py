from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from suborbit_lab import gl42
from suborbit_lab.errors import NotTransitive, PreconditionRatio
from suborbit_lab.perm import Permutation, PermGroup
from suborbit_lab.sampling import random_transitive_groups
from suborbit_lab.suborbits import (
    FIVE_SIXTHS,
    bergman_lenstra_classify,
    bipartite_commutation_check,
    conjecture_form_check,
    cycle_union_check,
    fixed_block_check,
    format_ratio,
    gap_scan,
    lemma_structure_check,
    suborbit_profile,
)

P = Permutation.from_cycles


@pytest.fixture(scope="module")
def extremal():
    h12, h24 = gl42.extremal_matrix_groups()
    return gl42.extremal_permutation_group(h12)[0], gl42.extremal_permutation_group(h24)[0]


def wreath_c2_c3() -> PermGroup:
    """C2 wr C3 on 6 points: blocks {0,1}, {2,3}, {4,5}."""
    return PermGroup([P(6, (0, 1)), P(6, (0, 2, 4), (1, 3, 5))])


def test_profiles():
    c4 = suborbit_profile(PermGroup.cyclic(4))
    assert c4.sizes == {1: 4} and c4.ratio == 1
    s4 = suborbit_profile(PermGroup.symmetric(4))
    assert s4.sizes == {1: 1, 3: 3} and s4.ratio == Fraction(1, 4)
    with pytest.raises(NotTransitive):
        suborbit_profile(PermGroup([P(4, (0, 1))]))


def test_extremal_profiles(extremal):
    g48, g96 = extremal
    p48, p96 = suborbit_profile(g48), suborbit_profile(g96)
    assert (g48.degree, p48.ratio, p48.sizes) == (48, FIVE_SIXTHS, {1: 8, 2: 32, 4: 8})
    assert (g96.degree, p96.ratio, p96.sizes) == (96, FIVE_SIXTHS, {1: 16, 2: 64, 4: 16})
    assert p48.d == 8 and p48.x == {1: 1, 2: 4, 4: 1}


def test_fixed_block(extremal):
    assert fixed_block_check(PermGroup.cyclic(5))
    assert fixed_block_check(PermGroup.symmetric(3))
    assert fixed_block_check(extremal[0])


def test_families():
    assert bergman_lenstra_classify(PermGroup.cyclic(6)).tag == "regular"
    assert bergman_lenstra_classify(PermGroup.dihedral(4)).tag == "stabilizer_order_2"
    verdict = bergman_lenstra_classify(wreath_c2_c3())
    assert verdict.tag == "elementary_abelian_index_2"
    assert len(verdict.witness) == 8
    assert bergman_lenstra_classify(PermGroup.symmetric(4)).tag == "not_applicable"


@pytest.mark.parametrize("which", [0, 1])
def test_lemma_checks_on_extremal_groups(extremal, which):
    report = lemma_structure_check(extremal[which])
    assert report.passed, report.checks
    assert "valency_two_graph" not in report.checks  # x4 == 1 here


def test_lemma_precondition():
    with pytest.raises(PreconditionRatio):
        lemma_structure_check(PermGroup.cyclic(4))


def _cycle_graph(*cycles):
    adj = {}
    for cyc in cycles:
        for i, v in enumerate(cyc):
            adj[v] = {cyc[i - 1], cyc[(i + 1) % len(cyc)]}
    return adj


def test_cycle_union_check():
    adj = _cycle_graph(list(range(8)))
    res = cycle_union_check(adj, range(8))
    assert res["valency_two"] and res["hypothesis"] and res["holds"]
    # no edge inside W: the hypothesis is not met
    res = cycle_union_check(_cycle_graph([0, 1, 2, 3], [4, 5, 6, 7, 8, 9]), {0, 4})
    assert not res["hypothesis"] and res["holds"]


def _elementary(*gens):
    return PermGroup([P(10, *g) for g in gens]).element_set


def test_bipartite_check_commuting_sides():
    x = _elementary([(0, 1)], [(2, 3)], [(4, 5)])
    y = _elementary([(0, 1)], [(6, 7)], [(8, 9)])
    res = bipartite_commutation_check(x, y, lambda s: True)
    assert res["sides"] == (3, 3) and res["edges"] == 9 and res["holds"]


def test_bipartite_check_detects_failure():
    x = _elementary([(0, 1)], [(2, 3)], [(4, 5)])
    y = _elementary([(0, 1)], [(2, 4), (3, 5)], [(6, 7)])
    res = bipartite_commutation_check(x, y, lambda s: True)
    assert res["edges"] == 9 and not res["commutes"] and not res["holds"]


def test_gap_scan(extremal):
    regular = [suborbit_profile(PermGroup.cyclic(n), name=f"C{n}") for n in range(2, 7)]
    rep = gap_scan(regular)
    assert rep.violations == [] and set(rep.histogram) == {1}
    rep = gap_scan([*regular, suborbit_profile(extremal[0], name="g48")])
    assert rep.violations == [] and rep.histogram[FIVE_SIXTHS] == 1


def test_conjecture_form():
    assert conjecture_form_check(Fraction(1)) == (True, Fraction(1))
    assert conjecture_form_check(FIVE_SIXTHS) == (True, Fraction(3, 2))
    assert conjecture_form_check(Fraction(3, 5)) == (True, Fraction(5))
    assert conjecture_form_check(Fraction(7, 12)) == (True, Fraction(6))
    assert conjecture_form_check(Fraction(13, 24)) == (True, Fraction(12))
    assert conjecture_form_check(Fraction(17, 30)) == (True, Fraction(15, 2))
    # 4/5 would need q = 5/3
    assert conjecture_form_check(Fraction(4, 5)) == (False, Fraction(5, 3))
    assert conjecture_form_check(Fraction(1, 3)) == (True, None)


@given(st.integers(1, 60), st.integers(1, 60))
def test_conjecture_form_round_trip(two_q, k):
    q = Fraction(two_q, 2)
    ratio = (q + 1) / (2 * q)
    if ratio > Fraction(1, 2):
        ok, got = conjecture_form_check(ratio)
        assert ok and got == q


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_random_groups_respect_gap(seed):
    for name, g in random_transitive_groups(2, seed, degrees=(4, 5, 6)):
        p = suborbit_profile(g, name=name)
        assert not FIVE_SIXTHS < p.ratio < 1
        if p.ratio == 1:
            assert bergman_lenstra_classify(g).tag != "unclassified"


def test_format_ratio():
    assert format_ratio(Fraction(10, 12)) == "5/6"
    assert format_ratio(Fraction(1)) == "1/1"
