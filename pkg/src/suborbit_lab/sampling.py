"""Seeded sources of test groups.

``random_transitive_groups`` draws two random permutations of a small
degree and keeps the group they generate when it is transitive.
``harness_pairs`` lists proper pairs ``(G, R)`` with ``R`` regular: holomorph
style groups ``R x| A`` acting on ``R`` for small ``R`` and
``A <= Aut(R)``, plus a few symmetric and alternating groups with a regular
subgroup.  Every source is deterministic given its seed.
"""

from __future__ import annotations

import random
from collections.abc import Iterator, Sequence

from . import groups
from .cayley import RegularEmbedding, regular_identification
from .errors import ClosureCapExceeded
from .groups import GroupTable
from .perm import Permutation, PermGroup, is_transitive

HARNESS_ORDER_CAP = 5000


def random_transitive_groups(
    count: int, seed: int, degrees: Sequence[int] = (4, 5, 6, 7, 8)
) -> Iterator[tuple[str, PermGroup]]:
    """``count`` transitive groups, each generated by two random permutations."""
    rng = random.Random(seed)
    produced = 0
    attempt = 0
    while produced < count:
        attempt += 1
        n = rng.choice(list(degrees))
        gens = []
        for _ in range(2):
            images = list(range(n))
            rng.shuffle(images)
            gens.append(Permutation(images))
        G = PermGroup(gens, n)
        if not is_transitive(G):
            continue
        produced += 1
        yield f"rand{seed}-{attempt}-deg{n}", G


def regular_representation(table: GroupTable) -> list[Permutation]:
    """Right multiplication by every element, as permutations of indices."""
    return [
        Permutation._trusted(tuple(table.mul[x][g] for x in range(table.order)))
        for g in range(table.order)
    ]


def holomorph_pair(
    table: GroupTable, autos: Sequence[Sequence[int]], *, name: str = "", cap: int | None = None
) -> RegularEmbedding:
    """``R x| <autos>`` acting on the elements of ``R``, based at the identity."""
    right = regular_representation(table)
    r_gens = [right[g] for g in table.generating_set()]
    a_perms = [Permutation(a) for a in autos]
    G = PermGroup(r_gens + a_perms, table.order, cap=cap)
    emb = regular_identification(G, r_gens, 0, name=name)
    emb.table.name = table.name
    return emb


def small_groups() -> list[GroupTable]:
    """Groups of order at most 16 used by the harness."""
    out: list[GroupTable] = []
    for k in range(3, 17):
        out.append(groups.cyclic(k))
    for k in range(2, 5):
        out.append(groups.elementary_abelian(k))
    for order in (6, 8, 10, 12, 14, 16):
        out.append(groups.dihedral(order))
    out.append(groups.quaternion())
    out.append(groups.direct_product(groups.cyclic(4), groups.cyclic(2)))
    out.append(groups.direct_product(groups.cyclic(4), groups.cyclic(4)))
    out.append(groups.direct_product(groups.cyclic(4), groups.elementary_abelian(2)))
    out.append(groups.direct_product(groups.dihedral(8), groups.cyclic(2)))
    out.append(groups.direct_product(groups.quaternion(), groups.cyclic(2)))
    out.append(groups.direct_product(groups.cyclic(3), groups.elementary_abelian(2)))
    out.append(groups.generalized_dicyclic(groups.cyclic(6), 3))
    out.append(groups.generalized_dicyclic(groups.direct_product(groups.cyclic(4), groups.cyclic(2)), 2 * 2))
    return out


def _automorphism_choices(table: GroupTable, rng: random.Random) -> list[list[tuple[int, ...]]]:
    autos = [a for a in groups.automorphisms(table) if list(a) != list(range(table.order))]
    choices: list[list[tuple[int, ...]]] = []
    if not autos:
        return choices
    inversion = tuple(table.inv)
    if table.is_abelian() and inversion in autos:
        choices.append([inversion])
    if len(autos) + 1 <= 64:
        choices.append(autos)
    choices.append([rng.choice(autos)])
    choices.append(rng.sample(autos, min(2, len(autos))))
    inner = sorted({tuple(table.conjugate(x, g) for x in range(table.order)) for g in range(table.order)})
    inner = [a for a in inner if list(a) != list(range(table.order))]
    if inner:
        choices.append(inner[:3])
    return choices


def _symmetric_pairs() -> list[RegularEmbedding]:
    out = []
    for n in range(3, 7):
        out.append(regular_identification(
            PermGroup.symmetric(n), [Permutation.from_cycles(n, tuple(range(n)))], name=f"Sym({n})"
        ))
    v4 = [Permutation.from_cycles(4, (0, 1), (2, 3)), Permutation.from_cycles(4, (0, 2), (1, 3))]
    out.append(regular_identification(PermGroup.alternating(4), v4, name="Alt(4)"))
    out.append(regular_identification(PermGroup.symmetric(4), v4, name="Sym(4)"))
    out.append(regular_identification(PermGroup.dihedral(4), [Permutation.from_cycles(4, (0, 1, 2, 3))], name="Dih(4)"))
    out.append(regular_identification(PermGroup.alternating(5), [Permutation.from_cycles(5, (0, 1, 2, 3, 4))], name="Alt(5)"))
    out.append(regular_identification(PermGroup.dihedral(6), [Permutation.from_cycles(6, (0, 1, 2, 3, 4, 5))], name="Dih(6)"))
    return out


def harness_pairs(seed: int = 0) -> list[RegularEmbedding]:
    """Deterministic list of proper pairs ``(G, R)`` with ``|R| <= 16``."""
    rng = random.Random(seed)
    pairs: list[RegularEmbedding] = []
    seen = set()
    for table in small_groups():
        for autos in _automorphism_choices(table, rng):
            try:
                emb = holomorph_pair(table, autos, cap=HARNESS_ORDER_CAP)
            except ClosureCapExceeded:
                continue
            key = (table.name, emb.ambient.order, frozenset(emb.ambient.element_set))
            if not emb.is_proper or key in seen:
                continue
            seen.add(key)
            emb.name = f"{table.name}:{emb.ambient.order // table.order}"
            pairs.append(emb)
    pairs.extend(_symmetric_pairs())
    return pairs
