"""Permutations of {0..n-1} and the groups they generate.

Permutations act on the right: ``p(i)`` is the image of point ``i`` and
``p * q`` means "first ``p``, then ``q``", so ``(p * q)(i) == q(p(i))``.
All subgroup computations are brute-force filters over the cached element
list of the ambient group.
"""

from __future__ import annotations

import os
from collections import deque
from collections.abc import Iterable, Sequence
from math import factorial

from .errors import ClosureCapExceeded, NotASubgroup, NotTransitive

DEFAULT_CLOSURE_CAP = 200_000


def closure_cap() -> int:
    """Closure cap, overridable through ``SUBORBIT_LAB_CLOSURE_CAP``."""
    raw = os.environ.get("SUBORBIT_LAB_CLOSURE_CAP")
    return int(raw) if raw else DEFAULT_CLOSURE_CAP


class Permutation:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        n = len(images)
        if n < 1:
            raise ValueError("permutation degree must be at least 1")
        if sorted(images) != list(range(n)):
            raise ValueError(f"not a bijection on 0..{n - 1}: {list(images)}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Permutation:
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> Permutation:
        images = list(range(degree))
        for cyc in cycles:
            for k, p in enumerate(cyc):
                images[p] = cyc[(k + 1) % len(cyc)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        b = other.images
        return Permutation._trusted(tuple(b[i] for i in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._trusted(tuple(inv))

    def conjugate(self, g: Permutation) -> Permutation:
        """``g^-1 * self * g``."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        p, k = self, 1
        while not p.is_identity():
            p = p * self
            k += 1
        return k

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self.images[start]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self.images[nxt]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return f"Permutation(id, degree={self.degree})"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial)


def generate_elements(
    generators: Sequence[Permutation], cap: int | None = None, degree: int | None = None
) -> list[Permutation]:
    """Breadth-first closure of ``generators`` starting from the identity.

    The order is deterministic: elements appear in BFS order, with the
    generators applied in the given order at every step.
    """
    if cap is None:
        cap = closure_cap()
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if degree is None:
        if not generators:
            raise ValueError("degree is required for an empty generating set")
        degree = generators[0].degree
    if any(g.degree != degree for g in generators):
        raise ValueError("generators must share one degree")

    ident = Permutation.identity(degree)
    gens = [g.images for g in generators]
    seen = {ident}
    out = [ident]
    queue = deque([ident.images])
    while queue:
        a = queue.popleft()
        for b in gens:
            c = tuple(b[i] for i in a)
            p = Permutation._trusted(c)
            if p not in seen:
                seen.add(p)
                out.append(p)
                if len(out) > cap:
                    raise ClosureCapExceeded(cap)
                queue.append(c)
    return out


class PermGroup:
    """A permutation group given by generators, with a lazily cached closure."""

    def __init__(
        self,
        generators: Iterable[Permutation],
        degree: int | None = None,
        *,
        cap: int | None = None,
        elements: Sequence[Permutation] | None = None,
    ):
        self.generators = tuple(generators)
        if degree is None:
            if not self.generators:
                raise ValueError("degree is required for an empty generating set")
            degree = self.generators[0].degree
        if degree < 1:
            raise ValueError("degree must be at least 1")
        self.degree = degree
        self._cap = cap
        self._elements = list(elements) if elements is not None else None
        self._element_set: frozenset[Permutation] | None = None

    @classmethod
    def from_elements(cls, degree: int, elements: Sequence[Permutation]) -> PermGroup:
        """Wrap an element list already known to be a group."""
        nontrivial = [e for e in elements if not e.is_identity()]
        return cls(nontrivial, degree, elements=elements)

    @classmethod
    def symmetric(cls, n: int) -> PermGroup:
        if n == 1:
            return cls([], 1)
        gens = [Permutation.from_cycles(n, (0, 1))]
        if n > 2:
            gens.append(Permutation.from_cycles(n, tuple(range(n))))
        return cls(gens)

    @classmethod
    def alternating(cls, n: int) -> PermGroup:
        gens = [Permutation.from_cycles(n, (0, 1, k)) for k in range(2, n)]
        return cls(gens, n)

    @classmethod
    def cyclic(cls, n: int) -> PermGroup:
        return cls([Permutation.from_cycles(n, tuple(range(n)))], n)

    @classmethod
    def dihedral(cls, n: int) -> PermGroup:
        """Symmetries of the n-gon acting on its n vertices (order 2n)."""
        rot = Permutation.from_cycles(n, tuple(range(n)))
        refl = Permutation([(-i) % n for i in range(n)])
        return cls([rot, refl], n)

    @property
    def elements(self) -> list[Permutation]:
        if self._elements is None:
            self._elements = generate_elements(self.generators, self._cap, self.degree)
            assert factorial(self.degree) % len(self._elements) == 0
        return self._elements

    @property
    def element_set(self) -> frozenset[Permutation]:
        if self._element_set is None:
            self._element_set = frozenset(self.elements)
        return self._element_set

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return self.order

    def __contains__(self, g: Permutation) -> bool:
        return g in self.element_set

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return self.degree == other.degree and self.element_set <= other.element_set

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1 :])

    def sorted_elements(self) -> list[Permutation]:
        """Elements in canonical (lexicographic on images) order."""
        return sorted(self.elements)

    def __repr__(self) -> str:
        order = len(self._elements) if self._elements is not None else "?"
        return f"PermGroup(degree={self.degree}, order={order})"


PointSet = frozenset


def orbit(group: PermGroup, point: int) -> frozenset[int]:
    if not 0 <= point < group.degree:
        raise ValueError(f"point {point} outside 0..{group.degree - 1}")
    seen = {point}
    stack = [point]
    gens = [g.images for g in group.generators]
    while stack:
        p = stack.pop()
        for g in gens:
            q = g[p]
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return frozenset(seen)


def orbits(group: PermGroup) -> list[frozenset[int]]:
    """All orbits, ordered by their smallest point."""
    out, covered = [], set()
    for p in range(group.degree):
        if p not in covered:
            o = orbit(group, p)
            covered |= o
            out.append(o)
    return out


def is_transitive(group: PermGroup) -> bool:
    return len(orbit(group, 0)) == group.degree


def point_stabilizer(group: PermGroup, point: int) -> PermGroup:
    if not 0 <= point < group.degree:
        raise ValueError(f"point {point} outside 0..{group.degree - 1}")
    elems = [g for g in group.elements if g.images[point] == point]
    stab = PermGroup.from_elements(group.degree, elems)
    assert len(orbit(group, point)) * len(elems) == group.order
    return stab


def _check_sub(group: PermGroup, sub: PermGroup) -> None:
    if sub.degree != group.degree or not sub.element_set <= group.element_set:
        raise NotASubgroup("subgroup elements are not all in the group")


def normalizer(group: PermGroup, sub: PermGroup) -> PermGroup:
    _check_sub(group, sub)
    subset = sub.element_set
    gens = sub.generators
    elems = [
        g for g in group.elements
        if all(x.conjugate(g) in subset for x in gens)
    ]
    return PermGroup.from_elements(group.degree, elems)


def centralizer(group: PermGroup, sub: PermGroup) -> PermGroup:
    _check_sub(group, sub)
    gens = sub.generators
    elems = [g for g in group.elements if all(g * x == x * g for x in gens)]
    return PermGroup.from_elements(group.degree, elems)


def setwise_image(points: Iterable[int], g: Permutation) -> frozenset[int]:
    return frozenset(g.images[p] for p in points)


def is_block(group: PermGroup, candidate: Iterable[int]) -> bool:
    """Whether ``candidate`` is a block of imprimitivity of a transitive group."""
    block = frozenset(candidate)
    if not block:
        raise ValueError("candidate block must be non-empty")
    if not is_transitive(group):
        raise NotTransitive("is_block needs a transitive group")
    for g in group.elements:
        img = setwise_image(block, g)
        if img != block and img & block:
            return False
    return True


def conjugacy_classes(group: PermGroup) -> list[list[Permutation]]:
    """Conjugacy classes, each sorted, ordered by their least element."""
    remaining = set(group.elements)
    classes = []
    elems = group.elements
    for x in sorted(group.elements):
        if x not in remaining:
            continue
        cls = {x.conjugate(g) for g in elems}
        remaining -= cls
        classes.append(sorted(cls))
    assert sum(len(c) for c in classes) == group.order
    return classes
