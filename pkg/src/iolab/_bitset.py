"""Small helpers for vertex sets packed into Python ints."""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_set(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def maximal_cliques(nbrs: list[int], universe: int) -> Iterator[int]:
    """Bron-Kerbosch with Tomita pivoting over bitset adjacency.

    ``nbrs[v]`` must not contain ``v``. Only vertices of ``universe`` are used.
    """
    if not universe:
        return
    stack = [(0, universe, 0)]
    while stack:
        r, p, x = stack.pop()
        if not p:
            if not x:
                yield r
            continue
        # pivot maximising |P & N(u)| keeps the branching small
        pivot = max(bits(p | x), key=lambda u: (p & nbrs[u]).bit_count())
        for v in bits(p & ~nbrs[pivot]):
            nv = nbrs[v]
            stack.append((r | (1 << v), p & nv, x & nv))
            p &= ~(1 << v)
            x |= 1 << v


def components(nbrs: list[int], universe: int) -> list[int]:
    """Connected components of the graph restricted to ``universe``, ordered by lowest vertex."""
    out = []
    left = universe
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= nbrs[v]
            nxt &= universe & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        left &= ~comp
    return out
