"""Test corpus: catalog designs, Steiner triple systems, random partial designs.

All outputs are design-side structures: rows are points, columns are blocks.
Nothing here is trusted; the tests check every output by pair counting.
"""

from __future__ import annotations

import random
from itertools import combinations, product

from .errors import BadResidue, DegenerateParams, UnknownName
from .structure import IncidenceStructure, from_blocks

# A resolvable STS(15), 0-based, lexicographic order.  These are the lines of
# PG(3,2) relabelled; a resolution into 7 classes exists and is re-found by
# the solver in the tests.
KIRKMAN_15 = (
    (0, 1, 2), (0, 3, 4), (0, 5, 6), (0, 7, 8), (0, 9, 10), (0, 11, 12), (0, 13, 14),
    (1, 3, 5), (1, 4, 6), (1, 7, 9), (1, 8, 10), (1, 11, 13), (1, 12, 14), (2, 3, 6),
    (2, 4, 5), (2, 7, 10), (2, 8, 9), (2, 11, 14), (2, 12, 13), (3, 7, 11), (3, 8, 12),
    (3, 9, 13), (3, 10, 14), (4, 7, 12), (4, 8, 11), (4, 9, 14), (4, 10, 13), (5, 7, 13),
    (5, 8, 14), (5, 9, 11), (5, 10, 12), (6, 7, 14), (6, 8, 13), (6, 9, 12), (6, 10, 11),
)


def _cyclic(base: tuple[int, ...], order: int) -> list[tuple[int, ...]]:
    return [tuple(sorted((b + i) % order for b in base)) for i in range(order)]


def _affine_plane_3() -> list[tuple[int, ...]]:
    # points (x, y) of Z_3^2 numbered 3x + y; lines y = ax + b and x = c
    lines = []
    for a, b in product(range(3), repeat=2):
        lines.append(tuple(sorted(3 * x + (a * x + b) % 3 for x in range(3))))
    for c in range(3):
        lines.append(tuple(3 * c + y for y in range(3)))
    return sorted(lines)


CATALOG = {
    "fano": (7, lambda: _cyclic((0, 1, 3), 7)),
    "ag2_3": (9, _affine_plane_3),
    "pg2_3": (13, lambda: _cyclic((0, 1, 3, 9), 13)),
    "kirkman_15": (15, lambda: list(KIRKMAN_15)),
    "complete_triangle": (3, lambda: [(0, 1), (1, 2), (0, 2)]),
}


def catalog(name: str) -> IncidenceStructure:
    """One of ``fano``, ``ag2_3``, ``pg2_3``, ``kirkman_15``, ``complete_triangle``."""
    try:
        m, blocks = CATALOG[name]
    except KeyError:
        raise UnknownName(f"unknown catalog design {name!r}; known: {sorted(CATALOG)}") from None
    return from_blocks(blocks(), m)


def bose_sts(m: int) -> IncidenceStructure:
    """Steiner triple system of order m = 3 (mod 6) by the Bose construction.

    Points are Z_q x Z_3 with q = m/3 odd, point (x, i) numbered i*q + x.
    Uses the idempotent commutative quasigroup x o y = (x + y)(q + 1)/2 mod q.
    """
    if m % 6 != 3:
        raise BadResidue(f"Bose construction needs m = 3 (mod 6), got {m}")
    q = m // 3
    half = (q + 1) // 2

    def pt(x: int, i: int) -> int:
        return (i % 3) * q + x

    blocks = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(q)]
    for x, y in combinations(range(q), 2):
        z = (x + y) * half % q
        for i in range(3):
            blocks.append((pt(x, i), pt(y, i), pt(z, i + 1)))
    return from_blocks(blocks, m)


def skolem_sts(m: int) -> IncidenceStructure:
    """Steiner triple system of order m = 1 (mod 6) by the Skolem construction.

    With m = 6t + 1, points are Z_{2t} x Z_3 (point (x, i) numbered
    i*2t + x) plus an extra point numbered m - 1.  The half-idempotent
    commutative quasigroup on Z_{2t} sends x o y to s/2 when s = x + y mod 2t
    is even and to (s - 1)/2 + t when s is odd.
    """
    if m % 6 != 1:
        raise BadResidue(f"Skolem construction needs m = 1 (mod 6), got {m}")
    t = (m - 1) // 6
    q = 2 * t
    inf = m - 1

    def pt(x: int, i: int) -> int:
        return (i % 3) * q + x

    def op(x: int, y: int) -> int:
        s = (x + y) % q
        return s // 2 if s % 2 == 0 else (s - 1) // 2 + t

    blocks = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(t)]
    for x in range(t):
        for i in range(3):
            blocks.append((inf, pt(t + x, i), pt(x, i + 1)))
    for x, y in combinations(range(q), 2):
        for i in range(3):
            blocks.append((pt(x, i), pt(y, i), pt(op(x, y), i + 1)))
    return from_blocks(blocks, m)


def sts(m: int) -> IncidenceStructure:
    """STS(m) by whichever construction fits the residue of m."""
    if m % 6 == 3:
        return bose_sts(m)
    if m % 6 == 1:
        return skolem_sts(m)
    raise BadResidue(f"no Steiner triple system of order {m}")


def random_partial(m: int, l: int, target_n: int, seed: int) -> IncidenceStructure:
    """Random partial (m, l, 1) design built greedily.

    Samples l-subsets of points and keeps those whose pairs are all still
    uncovered, until ``target_n`` blocks exist or 50*m samples in a row fail.
    The achieved block count is the structure's ``n`` and may fall short.
    Points may end up in no block.
    """
    if l < 2 or m <= l or target_n < 1:
        raise DegenerateParams(f"need l >= 2, l < m and target_n >= 1; got m={m}, l={l}, n={target_n}")
    rng = random.Random(seed)
    covered: set[tuple[int, int]] = set()
    blocks: list[tuple[int, ...]] = []
    failures = 0
    while len(blocks) < target_n and failures < 50 * m:
        block = tuple(sorted(rng.sample(range(m), l)))
        pairs = list(combinations(block, 2))
        if any(p in covered for p in pairs):
            failures += 1
            continue
        covered.update(pairs)
        blocks.append(block)
        failures = 0
    return from_blocks(blocks, m)
