"""Finite posets and simple graphs over dense vertex indices.

A :class:`Poset` stores the full strict order ``lt`` as an ``n x n`` boolean
matrix (transitively closed), together with per-vertex up/down bitsets used by
the combinatorial kernels elsewhere in the package.  :class:`SimpleGraph` is
the undirected counterpart.  Both are immutable after construction.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

import networkx as nx
import numpy as np

from ._bitset import bits, mask_of, maximal_cliques, to_set
from .errors import CycleError, SizeGuardError

EXHAUSTIVE_GUARD = 18
ISOMORPHISM_GUARD = 12


def exhaustive_guard(default: int = EXHAUSTIVE_GUARD) -> int:
    """Size bound for 2^n routines; ``IOLAB_GUARD_N`` overrides it."""
    env = os.environ.get("IOLAB_GUARD_N")
    return int(env) if env else default


def _readonly(a) -> np.ndarray:
    a = np.array(a, dtype=bool)
    a.setflags(write=False)
    return a


def _row_masks(m: np.ndarray) -> list[int]:
    return [mask_of(np.flatnonzero(row).tolist()) for row in m]


class Poset:
    """Finite strict partial order on ``range(n)``; ``lt[i, j]`` means i < j."""

    __slots__ = ("n", "names", "lt", "up_masks", "down_masks")

    def __init__(self, lt, names: Sequence[str] | None = None, *, check: bool = True):
        lt = _readonly(lt)
        if lt.ndim != 2 or lt.shape[0] != lt.shape[1]:
            raise ValueError(f"relation must be square, got shape {lt.shape}")
        self.n = lt.shape[0]
        if names is not None:
            names = tuple(str(s) for s in names)
            if len(names) != self.n:
                raise ValueError("names length does not match vertex count")
        self.names = names
        self.lt = lt
        self.up_masks = _row_masks(lt)
        self.down_masks = _row_masks(lt.T)
        if check:
            self._check()

    def _check(self):
        lt = self.lt
        if lt.diagonal().any():
            raise ValueError("relation is not irreflexive")
        if (lt & lt.T).any():
            raise ValueError("relation is not antisymmetric")
        for i in range(self.n):
            for j in bits(self.up_masks[i]):
                if self.up_masks[j] & ~self.up_masks[i]:
                    raise ValueError(f"relation is not transitive at {i}<{j}")

    # structure protocol shared with SimpleGraph (used by module routines)
    @property
    def out_masks(self) -> list[int]:
        return self.up_masks

    @property
    def in_masks(self) -> list[int]:
        return self.down_masks

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def label(self, v: int) -> str:
        return self.names[v] if self.names else str(v)

    def labels(self) -> list[str]:
        return [self.label(v) for v in range(self.n)]

    def less(self, i: int, j: int) -> bool:
        return bool(self.lt[i, j])

    def comparable(self, i: int, j: int) -> bool:
        return bool(self.lt[i, j] or self.lt[j, i])

    def comp_mask(self, v: int) -> int:
        return self.up_masks[v] | self.down_masks[v]

    def inc_mask(self, v: int) -> int:
        return self.full_mask & ~(self.comp_mask(v) | (1 << v))

    def pairs(self) -> list[tuple[int, int]]:
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(self.lt))]

    def induced(self, vertices: Sequence[int]) -> "Poset":
        """Subposet on ``vertices``; vertex k of the result is ``vertices[k]``."""
        idx = list(vertices)
        names = [self.label(v) for v in idx] if self.names else None
        return Poset(self.lt[np.ix_(idx, idx)], names, check=False)

    def with_names(self, names: Sequence[str] | None) -> "Poset":
        return Poset(self.lt, names, check=False)

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.lt, other.lt))

    def __hash__(self):
        return hash((self.n, self.lt.tobytes()))

    def __repr__(self):
        return f"Poset(n={self.n}, comparabilities={int(self.lt.sum())})"


class SimpleGraph:
    """Finite undirected graph on ``range(n)`` without loops."""

    __slots__ = ("n", "names", "adj", "nbr_masks")

    def __init__(self, adj, names: Sequence[str] | None = None, *, check: bool = True):
        adj = _readonly(adj)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError(f"adjacency must be square, got shape {adj.shape}")
        self.n = adj.shape[0]
        if names is not None:
            names = tuple(str(s) for s in names)
            if len(names) != self.n:
                raise ValueError("names length does not match vertex count")
        self.names = names
        self.adj = adj
        self.nbr_masks = _row_masks(adj)
        if check:
            if adj.diagonal().any():
                raise ValueError("graph has a loop")
            if not np.array_equal(adj, adj.T):
                raise ValueError("adjacency is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], names=None) -> "SimpleGraph":
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u, v] = adj[v, u] = True
        return cls(adj, names, check=False)

    @property
    def out_masks(self) -> list[int]:
        return self.nbr_masks

    @property
    def in_masks(self) -> list[int]:
        return self.nbr_masks

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def label(self, v: int) -> str:
        return self.names[v] if self.names else str(v)

    def labels(self) -> list[str]:
        return [self.label(v) for v in range(self.n)]

    def edges(self) -> list[tuple[int, int]]:
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(np.triu(self.adj)))]

    def complement(self) -> "SimpleGraph":
        comp = ~self.adj
        np.fill_diagonal(comp, False)
        return SimpleGraph(comp, self.names, check=False)

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        idx = list(vertices)
        names = [self.label(v) for v in idx] if self.names else None
        return SimpleGraph(self.adj[np.ix_(idx, idx)], names, check=False)

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.adj, other.adj))

    def __hash__(self):
        return hash((self.n, self.adj.tobytes()))

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, edges={int(self.adj.sum()) // 2})"


@dataclass(frozen=True)
class LevelDecomposition:
    levels: tuple[frozenset[int], ...]

    @property
    def height(self) -> int:
        return len(self.levels)

    def level_of(self) -> dict[int, int]:
        return {v: k for k, lev in enumerate(self.levels) for v in lev}


# ---------------------------------------------------------------- constructors


def poset_from_pairs(n: int, pairs: Iterable[tuple[int, int]], names=None) -> Poset:
    """Transitive closure of ``pairs`` on ``range(n)``; raises CycleError on a cycle."""
    pairs = list(pairs)
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise IndexError(f"pair ({a}, {b}) out of range for n={n}")
    reach = [0] * n
    for a, b in pairs:
        reach[a] |= 1 << b
    for k in range(n):
        bk = 1 << k
        rk = reach[k]
        for i in range(n):
            if reach[i] & bk:
                reach[i] |= rk
    bad = [i for i in range(n) if reach[i] >> i & 1]
    if bad:
        g = nx.DiGraph(pairs)
        cycle = [u for u, _ in nx.find_cycle(g, source=bad[0])]
        raise CycleError(cycle, names)
    lt = np.zeros((n, n), dtype=bool)
    for i in range(n):
        lt[i, list(bits(reach[i]))] = True
    return Poset(lt, names)


def chain(n: int) -> Poset:
    return Poset(np.triu(np.ones((n, n), dtype=bool), 1))


def antichain(n: int) -> Poset:
    return Poset(np.zeros((n, n), dtype=bool))


# ---------------------------------------------------------------- queries


def _check_vertex(P, x: int):
    if not 0 <= x < P.n:
        raise IndexError(f"vertex {x} out of range for n={P.n}")


def down_set(P: Poset, x: int) -> frozenset[int]:
    _check_vertex(P, x)
    return to_set(P.down_masks[x])


def up_set(P: Poset, x: int) -> frozenset[int]:
    _check_vertex(P, x)
    return to_set(P.up_masks[x])


def incomparables(P: Poset, x: int) -> frozenset[int]:
    _check_vertex(P, x)
    return to_set(P.inc_mask(x))


def min_elements(P: Poset) -> frozenset[int]:
    return frozenset(v for v in range(P.n) if not P.down_masks[v])


def max_elements(P: Poset) -> frozenset[int]:
    return frozenset(v for v in range(P.n) if not P.up_masks[v])


def is_chain(P: Poset) -> bool:
    return all(P.comp_mask(v) | (1 << v) == P.full_mask for v in range(P.n))


def is_antichain(P: Poset) -> bool:
    return not P.lt.any()


def is_antichain_set(P: Poset, mask: int) -> bool:
    return all(not (P.up_masks[v] & mask) for v in bits(mask))


def levels(P: Poset) -> LevelDecomposition:
    out = []
    placed = 0
    while placed != P.full_mask:
        lev = [v for v in range(P.n) if not placed >> v & 1 and not (P.down_masks[v] & ~placed)]
        out.append(frozenset(lev))
        placed |= mask_of(lev)
    return LevelDecomposition(tuple(out))


def width(P: Poset) -> int:
    """Maximum antichain size, via Dilworth: n minus a maximum matching of the strict order."""
    if P.n == 0:
        return 0
    g = nx.Graph()
    left = [("L", v) for v in range(P.n)]
    g.add_nodes_from(left)
    g.add_nodes_from(("R", v) for v in range(P.n))
    g.add_edges_from((("L", i), ("R", j)) for i, j in P.pairs())
    matching = nx.bipartite.hopcroft_karp_matching(g, top_nodes=left)
    return P.n - len(matching) // 2


def comparability_graph(P: Poset) -> SimpleGraph:
    return SimpleGraph(P.lt | P.lt.T, P.names, check=False)


def incomparability_graph(P: Poset) -> SimpleGraph:
    return comparability_graph(P).complement()


def dual(P: Poset) -> Poset:
    return Poset(P.lt.T, P.names, check=False)


def maximal_antichain_masks(P: Poset) -> list[int]:
    """Maximal antichains as bitsets (maximal cliques of the incomparability graph)."""
    nbrs = [P.inc_mask(v) for v in range(P.n)]
    return list(maximal_cliques(nbrs, P.full_mask))


# ---------------------------------------------------------------- isomorphism


def _signature(P: Poset, level_of: dict[int, int], v: int):
    return (level_of[v], P.down_masks[v].bit_count(), P.up_masks[v].bit_count())


def find_isomorphism(P: Poset, Q: Poset, guard: int = ISOMORPHISM_GUARD) -> list[int] | None:
    """An order isomorphism as a list ``f`` with ``P: i<j  iff  Q: f[i]<f[j]``, or None."""
    if max(P.n, Q.n) > guard:
        raise SizeGuardError(max(P.n, Q.n), guard, "isomorphism search")
    if P.n != Q.n or int(P.lt.sum()) != int(Q.lt.sum()):
        return None
    lp, lq = levels(P).level_of(), levels(Q).level_of()
    sp = [_signature(P, lp, v) for v in range(P.n)]
    sq = [_signature(Q, lq, v) for v in range(Q.n)]
    if sorted(sp) != sorted(sq):
        return None
    # most constrained vertices first
    order = sorted(range(P.n), key=lambda v: (sp.count(sp[v]), sp[v]))
    f = [-1] * P.n
    used = [False] * Q.n

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for w in range(Q.n):
            if used[w] or sq[w] != sp[v]:
                continue
            if all(P.lt[u, v] == Q.lt[f[u], w] and P.lt[v, u] == Q.lt[w, f[u]] for u in order[:k]):
                f[v], used[w] = w, True
                if extend(k + 1):
                    return True
                f[v], used[w] = -1, False
        return False

    return f if extend(0) else None


def are_isomorphic(P: Poset, Q: Poset, guard: int = ISOMORPHISM_GUARD) -> bool:
    return find_isomorphism(P, Q, guard) is not None


def find_embedding(P: Poset, Q: Poset) -> list[int] | None:
    """An injective map from P into Q that is an isomorphism onto its image (induced suborder)."""
    if P.n > Q.n:
        return None
    f = [-1] * P.n
    used = [False] * Q.n

    def extend(v: int) -> bool:
        if v == P.n:
            return True
        for w in range(Q.n):
            if used[w]:
                continue
            if all(P.lt[u, v] == Q.lt[f[u], w] and P.lt[v, u] == Q.lt[w, f[u]] for u in range(v)):
                f[v], used[w] = w, True
                if extend(v + 1):
                    return True
                f[v], used[w] = -1, False
        return False

    return f if extend(0) else None
