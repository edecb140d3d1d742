"""4x4 linear algebra over the field with two elements.

A vector of GF(2)^4 is a 4-bit mask: bit ``j`` is the coordinate on
``e_{j+1}``.  A matrix is a 16-bit integer whose row ``i`` (the image of
``e_{i+1}``) occupies bits ``4i..4i+3``.  Matrices act on row vectors from
the right, so ``apply(v, A * B) == apply(apply(v, A), B)``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from functools import lru_cache

import numpy as np

DIM = 4
NVEC = 1 << DIM
IDENTITY = 0b1000_0100_0010_0001


def matrix(rows: Sequence[Sequence[int]]) -> int:
    """Encode a 4x4 0/1 matrix given as printed (row by row)."""
    if len(rows) != DIM or any(len(r) != DIM for r in rows):
        raise ValueError("expected a 4x4 matrix")
    code = 0
    for i, row in enumerate(rows):
        for j, entry in enumerate(row):
            if entry not in (0, 1):
                raise ValueError(f"entry {entry!r} is not 0 or 1")
            code |= entry << (4 * i + j)
    return code


def rows_of(m: int) -> list[list[int]]:
    return [[(m >> (4 * i + j)) & 1 for j in range(DIM)] for i in range(DIM)]


def row(m: int, i: int) -> int:
    return (m >> (4 * i)) & 0xF


def apply(v: int, m: int) -> int:
    """Row vector ``v`` times matrix ``m``."""
    out = 0
    for i in range(DIM):
        if v >> i & 1:
            out ^= (m >> (4 * i)) & 0xF
    return out


def mul(a: int, b: int) -> int:
    out = 0
    for i in range(DIM):
        out |= apply(row(a, i), b) << (4 * i)
    return out


def transpose(m: int) -> int:
    out = 0
    for i in range(DIM):
        for j in range(DIM):
            out |= ((m >> (4 * i + j)) & 1) << (4 * j + i)
    return out


def rank(vectors: Iterable[int]) -> int:
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def is_invertible(m: int) -> bool:
    return rank(row(m, i) for i in range(DIM)) == DIM


@lru_cache(maxsize=None)
def inverse(m: int) -> int:
    p, prev = m, IDENTITY
    while p != IDENTITY:
        prev, p = p, mul(p, m)
    return prev


def span(vectors: Iterable[int]) -> frozenset[int]:
    out = {0}
    for v in vectors:
        out |= {w ^ v for w in out}
    return frozenset(out)


@lru_cache(maxsize=1)
def gl4_codes() -> np.ndarray:
    """All invertible matrices, ascending by code, as a uint16 array."""
    codes = [m for m in range(1 << 16) if is_invertible(m)]
    return np.array(codes, dtype=np.uint16)


def mul_many(a: np.ndarray, b: int | np.ndarray) -> np.ndarray:
    """Vectorised ``mul`` over arrays of matrix codes."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
    for i in range(DIM):
        r = (a >> (4 * i)) & 0xF
        img = np.zeros_like(out)
        for k in range(DIM):
            img ^= np.where((r >> k) & 1, (b >> (4 * k)) & 0xF, 0)
        out |= img << (4 * i)
    return out


def apply_many(v: int | np.ndarray, m: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=np.int64)
    m = np.asarray(m, dtype=np.int64)
    out = np.zeros(np.broadcast(v, m).shape, dtype=np.int64)
    for k in range(DIM):
        out ^= np.where((v >> k) & 1, (m >> (4 * k)) & 0xF, 0)
    return out
