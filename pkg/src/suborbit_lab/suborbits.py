"""Suborbit profiles of transitive permutation groups.

For a base point ``a`` the domain splits into ``parts[i]``, the points whose
orbit under the stabilizer ``G_a`` has exactly ``i`` elements.  The ratio
``(|parts[1]| + |parts[2]|) / degree`` is kept as an exact ``Fraction``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotTransitive, PreconditionRatio
from .perm import (
    Permutation,
    PermGroup,
    is_block,
    is_transitive,
    normalizer,
    orbit,
    point_stabilizer,
)

FIVE_SIXTHS = Fraction(5, 6)


def format_ratio(r: Fraction) -> str:
    return f"{r.numerator}/{r.denominator}"


@dataclass(frozen=True)
class SuborbitProfile:
    base: int
    degree: int
    parts: dict[int, frozenset[int]]
    stabilizer_order: int
    name: str = ""

    @property
    def d(self) -> int:
        return len(self.parts[1])

    @property
    def x(self) -> dict[int, int]:
        return {i: len(p) // self.d for i, p in sorted(self.parts.items())}

    @property
    def sizes(self) -> dict[int, int]:
        return {i: len(p) for i, p in sorted(self.parts.items())}

    @property
    def ratio(self) -> Fraction:
        small = len(self.parts.get(1, ())) + len(self.parts.get(2, ()))
        return Fraction(small, self.degree)

    def check_invariants(self) -> None:
        covered = sorted(p for part in self.parts.values() for p in part)
        assert covered == list(range(self.degree)), "parts do not partition the domain"
        assert self.base in self.parts[1]
        assert all(len(p) % self.d == 0 for p in self.parts.values()), "d does not divide a part"
        x = self.x
        assert x[1] == 1 and self.degree == self.d * sum(x.values())


def suborbits(group: PermGroup, alpha: int) -> list[frozenset[int]]:
    """Orbits of the stabilizer of ``alpha``, ordered by least point."""
    stab = point_stabilizer(group, alpha)
    seen: set[int] = set()
    out = []
    for p in range(group.degree):
        if p not in seen:
            o = frozenset(g.images[p] for g in stab.elements)
            seen |= o
            out.append(o)
    return out


def suborbit_profile(group: PermGroup, alpha: int = 0, *, name: str = "", recheck: bool = True) -> SuborbitProfile:
    if not is_transitive(group):
        raise NotTransitive("suborbit profiles need a transitive group")
    parts: dict[int, set[int]] = {}
    for o in suborbits(group, alpha):
        parts.setdefault(len(o), set()).update(o)
    profile = SuborbitProfile(
        base=alpha,
        degree=group.degree,
        parts={i: frozenset(p) for i, p in sorted(parts.items())},
        stabilizer_order=group.order // group.degree,
        name=name,
    )
    profile.check_invariants()
    if recheck and group.degree > 1:
        other = suborbit_profile(group, (alpha + 1) % group.degree, recheck=False)
        assert other.sizes == profile.sizes, "suborbit sizes depend on the base point"
    return profile


def fixed_block_check(group: PermGroup, alpha: int = 0) -> bool:
    """Fixed points of ``G_alpha`` are the ``N_G(G_alpha)``-orbit of alpha, and a block."""
    if not is_transitive(group):
        raise NotTransitive("fixed_block_check needs a transitive group")
    stab = point_stabilizer(group, alpha)
    fixed = frozenset(p for p in range(group.degree) if all(g.images[p] == p for g in stab.elements))
    norm = normalizer(group, stab)
    return fixed == orbit(norm, alpha) and is_block(group, fixed)


# -- Bergman-Lenstra families ------------------------------------------------


@dataclass(frozen=True)
class TrichotomyVerdict:
    tag: str
    witness: frozenset[Permutation] | None = None


def bergman_lenstra_classify(group: PermGroup, alpha: int = 0) -> TrichotomyVerdict:
    """Which family a group with all suborbits of size <= 2 belongs to.

    Families are tried in order: regular, stabilizer of order two, then an
    elementary abelian normal 2-subgroup ``N`` containing ``G_alpha`` with
    index two.  Every such ``N`` is ``G_alpha`` together with one coset
    ``G_alpha t``, so scanning the involutions ``t`` is exhaustive.
    """
    profile = suborbit_profile(group, alpha, recheck=False)
    if profile.ratio != 1:
        return TrichotomyVerdict("not_applicable")
    stab = point_stabilizer(group, alpha)
    if stab.order == 1:
        return TrichotomyVerdict("regular")
    if stab.order == 2:
        return TrichotomyVerdict("stabilizer_order_2", stab.element_set)
    witness = elementary_abelian_overgroup(group, stab)
    if witness is not None:
        return TrichotomyVerdict("elementary_abelian_index_2", witness)
    return TrichotomyVerdict("unclassified")


def _is_elementary_abelian(elems: Iterable[Permutation]) -> bool:
    elems = list(elems)
    return all((g * g).is_identity() for g in elems) and all(
        a * b == b * a for a, b in itertools.combinations(elems, 2)
    )


def elementary_abelian_overgroup(group: PermGroup, stab: PermGroup) -> frozenset[Permutation] | None:
    if not _is_elementary_abelian(stab.elements):
        return None
    inside = stab.element_set
    for t in group.sorted_elements():
        if t in inside or not (t * t).is_identity():
            continue
        if any(t * s != s * t for s in stab.generators):
            continue
        n = inside | {s * t for s in inside}
        if all(x.conjugate(g) in n for x in n for g in group.generators):
            return frozenset(n)
    return None


# -- lemma checkers -------------------------------------------------------------


def point_stabilizers(group: PermGroup) -> list[frozenset[Permutation]]:
    """``G_w`` for every point ``w`` as an element set."""
    stabs: list[set[Permutation]] = [set() for _ in range(group.degree)]
    for g in group.elements:
        for p, q in enumerate(g.images):
            if p == q:
                stabs[p].add(g)
    return [frozenset(s) for s in stabs]


def _product_set(a: Iterable[Permutation], b: Iterable[Permutation]) -> frozenset[Permutation]:
    b = list(b)
    return frozenset(x * y for x in a for y in b)


def bipartite_commutation_check(
    x: frozenset[Permutation],
    y: frozenset[Permutation],
    is_conjugate_of_x: Callable[[frozenset[Permutation]], bool],
) -> dict:
    """Bipartite subgroup graph between ``X`` and ``Y`` over ``Z = X & Y``.

    Vertices are the subgroups strictly between ``Z`` and ``X`` (resp. ``Y``);
    ``X_i ~ Y_j`` when ``X_i Y_j`` is a conjugate of ``X``.  With six or more
    edges ``X`` must commute with ``Y``.
    """
    z = x & y
    lam_x, lam_y = _intermediate_subgroups(x, z), _intermediate_subgroups(y, z)
    edges = 0
    for xi in lam_x:
        for yj in lam_y:
            prod = _product_set(xi, yj)
            if is_conjugate_of_x(prod):
                edges += 1
    commutes = all(a * b == b * a for a in x for b in y)
    return {
        "edges": edges,
        "commutes": commutes,
        "holds": edges < 6 or commutes,
        "sides": (len(lam_x), len(lam_y)),
    }


def _intermediate_subgroups(x: frozenset[Permutation], z: frozenset[Permutation]) -> list[frozenset[Permutation]]:
    """Subgroups ``Z < X_i < X`` for ``X`` an elementary abelian 2-group."""
    out = set()
    for t in x - z:
        sub = z | {s * t for s in z}
        if len(sub) < len(x):
            out.add(frozenset(sub))
    return sorted(out, key=lambda s: sorted(s))


def cycle_union_check(adjacency: dict, w: Iterable) -> dict:
    """Valency-2 graph lemma: a set ``W`` containing an edge and closed under
    the "complement of two neighbourhoods" rule is everything, or the graph
    has at most six vertices.
    """
    w = frozenset(w)
    verts = frozenset(adjacency)
    valency_two = all(len(set(nb)) == 2 for nb in adjacency.values())
    contains_edge = any(b in adjacency[a] for a in w for b in w if a != b)
    hypothesis = contains_edge and all(
        verts - (frozenset(adjacency[d1]) | frozenset(adjacency[d2])) <= w
        for d1 in w
        for d2 in w
        if d1 != d2
    )
    conclusion = w == verts or len(verts) <= 6
    return {
        "valency_two": valency_two,
        "hypothesis": hypothesis,
        "conclusion": conclusion,
        "holds": not (valency_two and hypothesis) or conclusion,
    }


@dataclass
class LemmaReport:
    checks: dict[str, bool] = field(default_factory=dict)
    notes: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def lemma_structure_check(group: PermGroup, alpha: int = 0) -> LemmaReport:
    """Run the structural consequences of 1/2 < ratio < 1 on a concrete group."""
    profile = suborbit_profile(group, alpha, recheck=False)
    ratio = profile.ratio
    if not Fraction(1, 2) < ratio < 1:
        raise PreconditionRatio(f"ratio {format_ratio(ratio)} is not strictly between 1/2 and 1")
    report = LemmaReport()
    checks = report.checks
    parts = profile.parts
    checks["sizes_in_1_2_4"] = set(parts) <= {1, 2, 4}
    if not checks["sizes_in_1_2_4"]:
        return report

    stabs = point_stabilizers(group)
    g_alpha = stabs[alpha]
    # a transversal: an element carrying alpha to each point
    carry: dict[int, Permutation] = {}
    for g in group.elements:
        carry.setdefault(g.images[alpha], g)

    def parts_at(beta: int, i: int) -> frozenset[int]:
        g = carry[beta]
        return frozenset(g.images[p] for p in parts.get(i, ()))

    omega1, omega2, omega4 = parts[1], parts.get(2, frozenset()), parts.get(4, frozenset())
    overlap_ok = True
    factor_ok = True
    for beta in sorted(omega4):
        common = omega2 & parts_at(beta, 2)
        if not common:
            overlap_ok = False
            continue
        for w in common:
            gw = stabs[w]
            if _product_set(g_alpha & gw, stabs[beta] & gw) != gw:
                factor_ok = False
    checks["overlap_of_size2_parts"] = overlap_ok
    checks["stabilizer_factorization"] = factor_ok

    if len(omega1) == len(omega4):
        block = omega1 | omega4
        checks["fixed_union_block"] = is_block(group, block)
        n_alpha = normalizer(group, PermGroup.from_elements(group.degree, list(g_alpha))).element_set
        checks["equal_normalizers"] = all(
            normalizer(group, PermGroup.from_elements(group.degree, list(stabs[b]))).element_set == n_alpha
            for b in omega4
        )

    x4 = len(omega4) // profile.d
    report.notes["x4"] = x4
    report.notes["d"] = profile.d
    if ratio >= FIVE_SIXTHS:
        checks["omega4_at_most_twice_fixed"] = len(omega4) <= 2 * len(omega1)
        checks["stabilizer_elementary_abelian"] = _is_elementary_abelian(g_alpha)
        checks["stabilizers_commute"] = all(
            a * b == b * a for beta in omega4 for a in g_alpha for b in stabs[beta]
        )
        normal_ok = True
        for beta in omega4:
            joined = PermGroup(sorted(g_alpha | stabs[beta]), group.degree)
            elems = joined.element_set
            normal_ok &= (
                len(elems) == 16
                and _is_elementary_abelian(elems)
                and all(x.conjugate(g) in elems for x in joined.generators for g in group.generators)
            )
        checks["joined_stabilizers_normal_order_16"] = normal_ok

    conjugates = set(stabs)
    if _is_elementary_abelian(g_alpha) and omega4:
        configs = [
            bipartite_commutation_check(g_alpha, stabs[beta], conjugates.__contains__)
            for beta in sorted(omega4)
        ]
        checks["bipartite_commutation"] = all(c["holds"] for c in configs)
        report.notes["bipartite_edges"] = sorted({c["edges"] for c in configs})
    if x4 == 2:
        verts = sorted(conjugates, key=lambda s: sorted(s))
        size = len(g_alpha)
        adjacency = {
            v: [u for u in verts if u != v and len(u & v) * 4 == size] for v in verts
        }
        beta = min(omega4)
        core = g_alpha & stabs[beta]
        w = [v for v in verts if core <= v]
        res = cycle_union_check(adjacency, w)
        checks["valency_two_graph"] = res["holds"]
        report.notes["valency_two_graph"] = res
    return report


# -- gap scanning ---------------------------------------------------------------


@dataclass
class GapReport:
    count: int = 0
    histogram: Counter = field(default_factory=Counter)
    violations: list[str] = field(default_factory=list)

    def as_json(self) -> dict:
        return {
            "count": self.count,
            "histogram": {format_ratio(r): c for r, c in sorted(self.histogram.items())},
            "violations": sorted(self.violations),
        }


def gap_scan(profiles: Iterable[SuborbitProfile]) -> GapReport:
    """Flag any ratio strictly between 5/6 and 1."""
    report = GapReport()
    for p in profiles:
        report.count += 1
        report.histogram[p.ratio] += 1
        if FIVE_SIXTHS < p.ratio < 1:
            report.violations.append(p.name or f"profile#{report.count}")
    return report


def conjecture_form_check(ratio: Fraction) -> tuple[bool, Fraction | None]:
    """Whether ``ratio == (q + 1) / (2q)`` for some ``q`` with ``2q`` a positive integer.

    Ratios at most 1/2 are unconstrained and conform vacuously.
    """
    ratio = Fraction(ratio)
    if ratio <= Fraction(1, 2):
        return True, None
    a, b = ratio.numerator, ratio.denominator
    q = Fraction(b, 2 * a - b)
    return (2 * q).denominator == 1, q
