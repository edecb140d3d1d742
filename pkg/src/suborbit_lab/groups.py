"""Abstract finite groups stored as multiplication tables.

Elements are the integers ``0..n-1`` and the identity is always ``0``.
Subsets of a group (connection sets, subgroups, involution sets) are plain
``frozenset`` objects of element indices.
"""

from __future__ import annotations

import random
from collections import deque
from collections.abc import Callable, Iterable, Iterator, Sequence
from math import gcd

from .errors import BadConstructorInput, NotASubgroup, NotClosed, OrderTooLarge
from .perm import Permutation, PermGroup

ISO_ORDER_LIMIT = 64


class GroupTable:
    """Finite group given by its Cayley table.

    ``mul[x][y]`` is the index of ``x*y`` and ``inv[x]`` that of ``x^-1``.
    """

    def __init__(self, mul: Sequence[Sequence[int]], *, name: str = "", check: bool = True):
        self.mul = [list(r) for r in mul]
        self.order = len(self.mul)
        self.name = name
        if self.order < 1:
            raise ValueError("a group has at least one element")
        inv = [-1] * self.order
        for x, r in enumerate(self.mul):
            if len(r) != self.order:
                raise ValueError("multiplication table must be square")
            for y, z in enumerate(r):
                if z == 0:
                    inv[x] = y
                    break
        self.inv = inv
        self._orders: list[int] | None = None
        if check:
            self.validate()

    def validate(self, samples: int = 10_000, seed: int = 0) -> None:
        n, mul = self.order, self.mul
        for x in range(n):
            if mul[0][x] != x or mul[x][0] != x:
                raise ValueError("element 0 must be the identity")
            if sorted(mul[x]) != list(range(n)):
                raise ValueError(f"row {x} is not a permutation of the elements")
            if self.inv[x] < 0 or mul[self.inv[x]][x] != 0:
                raise ValueError(f"element {x} has no two-sided inverse")
        if n <= 64:
            triples: Iterable[tuple[int, int, int]] = (
                (a, b, c) for a in range(n) for b in range(n) for c in range(n)
            )
        else:
            rng = random.Random(seed)
            triples = (
                (rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(samples)
            )
        for a, b, c in triples:
            if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                raise ValueError(f"associativity fails at {(a, b, c)}")

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<GroupTable{label} order={self.order}>"

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv[x], -k
        out = 0
        for _ in range(k):
            out = self.mul[out][x]
        return out

    @property
    def element_orders(self) -> list[int]:
        if self._orders is None:
            orders = []
            for x in range(self.order):
                y, k = x, 1
                while y != 0:
                    y = self.mul[y][x]
                    k += 1
                orders.append(k)
            self._orders = orders
        return self._orders

    def exponent(self) -> int:
        e = 1
        for o in self.element_orders:
            e = e * o // gcd(e, o)
        return e

    def commute(self, x: int, y: int) -> bool:
        return self.mul[x][y] == self.mul[y][x]

    def is_abelian(self) -> bool:
        return all(self.commute(x, y) for x in range(self.order) for y in range(x))

    def center(self) -> frozenset[int]:
        n = self.order
        return frozenset(x for x in range(n) if all(self.commute(x, y) for y in range(n)))

    def conjugate(self, x: int, g: int) -> int:
        """``g^-1 x g``."""
        return self.mul[self.mul[self.inv[g]][x]][g]

    def commutator(self, x: int, y: int) -> int:
        """``x^-1 y^-1 x y``."""
        m, i = self.mul, self.inv
        return m[m[m[i[x]][i[y]]][x]][y]

    def subgroup_generated(self, gens: Iterable[int]) -> frozenset[int]:
        gens = list(gens)
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self.mul[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def is_subgroup(self, subset: Iterable[int]) -> bool:
        s = frozenset(subset)
        if 0 not in s:
            return False
        return all(self.mul[x][self.inv[y]] in s for x in s for y in s)

    def is_normal(self, subset: frozenset[int]) -> bool:
        return all(self.conjugate(x, g) in subset for x in subset for g in range(self.order))

    def generating_set(self) -> list[int]:
        """A small generating set: greedily add elements of largest order."""
        by_order = sorted(range(1, self.order), key=lambda x: (-self.element_orders[x], x))
        gens: list[int] = []
        current = frozenset([0])
        for x in by_order:
            if x not in current:
                gens.append(x)
                current = self.subgroup_generated(gens)
                if len(current) == self.order:
                    break
        return gens

    def flat(self) -> list[int]:
        return [z for r in self.mul for z in r]

    @classmethod
    def from_flat(cls, order: int, flat: Sequence[int], **kw) -> GroupTable:
        if len(flat) != order * order:
            raise ValueError(f"expected {order * order} table entries, got {len(flat)}")
        return cls([flat[i * order : (i + 1) * order] for i in range(order)], **kw)


def table_from_elements(
    elements: Sequence, product: Callable, *, name: str = "", check: bool = False
) -> GroupTable:
    """Build a table from an element list (identity first) and a product rule."""
    index = {e: i for i, e in enumerate(elements)}
    if len(index) != len(elements):
        raise ValueError("duplicate elements")
    try:
        mul = [[index[product(a, b)] for b in elements] for a in elements]
    except KeyError as exc:
        raise NotClosed(f"product {exc.args[0]!r} leaves the element list") from None
    return GroupTable(mul, name=name, check=check)


# -- constructors -----------------------------------------------------------


def from_regular_action(group: PermGroup) -> GroupTable:
    """Abstract group of a permutation group, elements in lexicographic order."""
    elems = group.sorted_elements()
    return table_from_elements(elems, lambda a, b: a * b, name=f"perm{group.order}")


def cyclic(k: int) -> GroupTable:
    if k < 1:
        raise BadConstructorInput("cyclic order must be >= 1")
    return GroupTable([[(a + b) % k for b in range(k)] for a in range(k)], name=f"C{k}", check=False)


def elementary_abelian(k: int) -> GroupTable:
    """The group of order ``2**k``; element ``x`` is a bitmask, product is xor."""
    if k < 0:
        raise BadConstructorInput("rank must be >= 0")
    n = 1 << k
    return GroupTable([[a ^ b for b in range(n)] for a in range(n)], name=f"C2^{k}", check=False)


def dihedral(order: int) -> GroupTable:
    """Dihedral group of the given (even) order; ``r^i s^e`` has index ``e*k + i``."""
    if order < 2 or order % 2:
        raise BadConstructorInput("dihedral order must be even and >= 2")
    k = order // 2
    elems = [(i, e) for e in (0, 1) for i in range(k)]

    def product(a, b):
        (i, e), (j, f) = a, b
        return ((i + (-j if e else j)) % k, (e + f) % 2)

    return table_from_elements(elems, product, name=f"D{order}")


def generalized_dicyclic(a: GroupTable, y: int) -> GroupTable:
    """``Dic(A, y, x)``: adjoin ``x`` with ``x^2 = y`` inverting every element of ``A``."""
    if not a.is_abelian():
        raise BadConstructorInput("A must be abelian")
    if a.order % 2:
        raise BadConstructorInput("A must have even order")
    if a.exponent() <= 2:
        raise BadConstructorInput("A must have exponent greater than 2")
    if y == 0 or a.mul[y][y] != 0:
        raise BadConstructorInput("y must be an involution of A")
    n = a.order
    mul = [[0] * (2 * n) for _ in range(2 * n)]
    for e in (0, 1):
        for f in (0, 1):
            for p in range(n):
                for q in range(n):
                    z = a.mul[p][a.inv[q] if e else q]
                    if e and f:
                        z = a.mul[z][y]
                    mul[e * n + p][f * n + q] = ((e + f) % 2) * n + z
    return GroupTable(mul, name=f"Dic({a.name or a.order})", check=False)


def direct_product(a: GroupTable, b: GroupTable) -> GroupTable:
    """Element ``(p, q)`` has index ``p * |B| + q``."""
    m = b.order
    mul = [
        [a.mul[x // m][y // m] * m + b.mul[x % m][y % m] for y in range(a.order * m)]
        for x in range(a.order * m)
    ]
    return GroupTable(mul, name=f"{a.name}x{b.name}", check=False)


def quotient(table: GroupTable, normal: frozenset[int], *, name: str = "") -> tuple[GroupTable, list[int]]:
    """Quotient by a normal subgroup; returns the table and the element-to-coset map."""
    if not table.is_subgroup(normal) or not table.is_normal(normal):
        raise NotASubgroup("quotient needs a normal subgroup")
    coset = [-1] * table.order
    reps: list[int] = []
    for x in range(table.order):
        if coset[x] < 0:
            for nn in normal:
                coset[table.mul[x][nn]] = len(reps)
            reps.append(x)
    mul = [[coset[table.mul[p][q]] for q in reps] for p in reps]
    return GroupTable(mul, name=name, check=False), coset


def central_product_map(a: GroupTable, b: GroupTable, za: int, zb: int) -> tuple[GroupTable, list[int]]:
    """Central product plus the map from ``A x B`` indices (``p*|B| + q``) to its elements."""
    for t, z, label in ((a, za, "A"), (b, zb, "B")):
        if z == 0 or t.mul[z][z] != 0:
            raise BadConstructorInput(f"z{label} must be an involution")
        if z not in t.center():
            raise BadConstructorInput(f"z{label} must be central")
    ab = direct_product(a, b)
    z = za * b.order + zb
    return quotient(ab, frozenset([0, z]), name=f"{a.name}o{b.name}")


def central_product(a: GroupTable, b: GroupTable, za: int, zb: int) -> GroupTable:
    """``(A x B) / <(za, zb)>`` for central involutions ``za`` and ``zb``."""
    return central_product_map(a, b, za, zb)[0]


def semidirect_v_h(h_codes: Sequence[int]) -> GroupTable:
    """``V x| H`` with ``V = GF(2)^4`` and ``H`` a group of 4x4 matrices.

    ``(v1, h1)(v2, h2) = (v1 + v2 h1^-1, h1 h2)``.  Element ``(v, h)`` has
    index ``16 * position(h) + v`` where the identity matrix comes first.
    """
    from . import gf2

    hs = sorted(set(h_codes), key=lambda m: (m != gf2.IDENTITY, m))
    if not hs or hs[0] != gf2.IDENTITY:
        raise NotClosed("H must contain the identity matrix")
    pos = {m: i for i, m in enumerate(hs)}
    nh = len(hs)
    hmul = [[0] * nh for _ in range(nh)]
    for i, p in enumerate(hs):
        for j, q in enumerate(hs):
            pq = gf2.mul(p, q)
            if pq not in pos:
                raise NotClosed("H is not closed under multiplication")
            hmul[i][j] = pos[pq]
    hinv = [hmul[i].index(0) for i in range(nh)]
    act = [[gf2.apply(v, hs[hinv[i]]) for v in range(16)] for i in range(nh)]
    n = 16 * nh
    mul = [[0] * n for _ in range(n)]
    for x in range(n):
        i, v1 = divmod(x, 16)
        row, acti, hrow = mul[x], act[i], hmul[i]
        for y in range(n):
            j, v2 = divmod(y, 16)
            row[y] = 16 * hrow[j] + (v1 ^ acti[v2])
    t = GroupTable(mul, name=f"V:H{nh}", check=False)
    t.h_codes = hs
    return t


def build_standard(kind: str, *args) -> GroupTable:
    """Dispatch on a constructor name, as used by the catalog expressions."""
    builders: dict[str, Callable[..., GroupTable]] = {
        "cyclic": cyclic,
        "elementary_abelian": elementary_abelian,
        "dihedral": dihedral,
        "generalized_dicyclic": generalized_dicyclic,
        "direct_product": direct_product,
        "central_product": central_product,
    }
    if kind not in builders:
        raise BadConstructorInput(f"unknown constructor {kind!r}")
    return builders[kind](*args)


def quaternion() -> GroupTable:
    c4 = cyclic(4)
    t = generalized_dicyclic(c4, 2)
    t.name = "Q8"
    return t


def unique_central_involution(table: GroupTable) -> int:
    zs = [z for z in table.center() if z and table.mul[z][z] == 0]
    if len(zs) != 1:
        raise BadConstructorInput(f"expected one central involution, found {len(zs)}")
    return zs[0]


# -- actions and element sets ----------------------------------------------


def right_cosets(table: GroupTable, sub: frozenset[int]) -> tuple[list[int], list[int]]:
    """Right cosets ``Sx``; returns (representatives, element -> coset index)."""
    coset = [-1] * table.order
    reps: list[int] = []
    for x in range(table.order):
        if coset[x] < 0:
            for s in sub:
                coset[table.mul[s][x]] = len(reps)
            reps.append(x)
    return reps, coset


def coset_action(table: GroupTable, sub: Iterable[int], generators: Sequence[int] | None = None) -> PermGroup:
    """Permutation group induced by right multiplication on the right cosets of ``sub``."""
    sub = frozenset(sub)
    if not table.is_subgroup(sub):
        raise NotASubgroup("coset_action needs a subgroup")
    reps, coset = right_cosets(table, sub)
    degree = len(reps)
    if generators is None:
        generators = table.generating_set()
    perms = [Permutation._trusted(tuple(coset[table.mul[r][g]] for r in reps)) for g in generators]
    return PermGroup(perms, degree)


def involution_set(table: GroupTable) -> frozenset[int]:
    """Elements of order at most two, identity included."""
    return frozenset(x for x in range(table.order) if table.mul[x][x] == 0)


def index_two_subgroups(table: GroupTable) -> list[frozenset[int]]:
    """Kernels of the nontrivial homomorphisms onto C2."""
    gens = table.generating_set()
    out = set()
    c2 = cyclic(2)
    for mask in range(1, 1 << len(gens)):
        images = [(mask >> k) & 1 for k in range(len(gens))]
        phi = _extend(table, c2, gens, images, injective=False)
        if phi is not None:
            out.add(frozenset(x for x in range(table.order) if phi[x] == 0))
    return sorted(out, key=sorted)


def is_generalized_dicyclic(table: GroupTable) -> tuple[bool, tuple[frozenset[int], int, int] | None]:
    """Exhaustive test over index-2 subgroups; witness is ``(A, y, x)``."""
    if table.order % 4:
        return False, None
    for a in index_two_subgroups(table):
        if not all(table.commute(p, q) for p in a for q in a):
            continue
        if max(table.element_orders[p] for p in a) <= 2:
            continue
        x = min(set(range(table.order)) - a)
        y = table.mul[x][x]
        if y == 0 or table.mul[y][y] != 0:
            continue
        if all(table.conjugate(p, x) == table.inv[p] for p in a):
            return True, (a, y, x)
    return False, None


# -- homomorphism search ------------------------------------------------------


def _extend(
    a: GroupTable, b: GroupTable, gens: Sequence[int], images: Sequence[int], *, injective: bool
) -> list[int] | None:
    """Extend generator images to ``<gens>``; ``None`` if inconsistent."""
    phi = [-1] * a.order
    phi[0] = 0
    used = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        px = phi[x]
        for g, ig in zip(gens, images):
            y = a.mul[x][g]
            py = b.mul[px][ig]
            if phi[y] < 0:
                if injective and py in used:
                    return None
                phi[y] = py
                used.add(py)
                queue.append(y)
            elif phi[y] != py:
                return None
    return phi


def _iso_search(a: GroupTable, b: GroupTable) -> Iterator[list[int]]:
    gens = a.generating_set()
    orders_a, orders_b = a.element_orders, b.element_orders
    candidates = [[y for y in range(b.order) if orders_b[y] == orders_a[g]] for g in gens]

    def rec(k: int, images: list[int]) -> Iterator[list[int]]:
        if k == len(gens):
            phi = _extend(a, b, gens, images, injective=True)
            if phi is not None and -1 not in phi:
                yield phi
            return
        for y in candidates[k]:
            images.append(y)
            if _extend(a, b, gens[: k + 1], images, injective=True) is not None:
                yield from rec(k + 1, images)
            images.pop()

    yield from rec(0, [])


def isomorphism(a: GroupTable, b: GroupTable) -> list[int] | None:
    if a.order != b.order:
        return None
    if a.order > ISO_ORDER_LIMIT:
        raise OrderTooLarge(f"isomorphism search capped at order {ISO_ORDER_LIMIT}")
    if sorted(a.element_orders) != sorted(b.element_orders):
        return None
    return next(_iso_search(a, b), None)


def brute_isomorphic(a: GroupTable, b: GroupTable) -> bool:
    return isomorphism(a, b) is not None


def automorphisms(table: GroupTable) -> list[tuple[int, ...]]:
    """Every automorphism, as a tuple of element images."""
    if table.order > ISO_ORDER_LIMIT:
        raise OrderTooLarge(f"automorphism search capped at order {ISO_ORDER_LIMIT}")
    return [tuple(phi) for phi in _iso_search(table, table)]
