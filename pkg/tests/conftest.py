from __future__ import annotations

import numpy as np
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from iolab.interval import LexSumSpec
from iolab.poset import Poset, SimpleGraph, antichain, poset_from_pairs

settings.register_profile(
    "iolab",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("iolab")


def random_poset(rng: np.random.Generator, n: int, p: float = 0.3) -> Poset:
    """Random DAG on a shuffled vertex order, transitively closed."""
    perm = rng.permutation(n)
    pairs = [(int(perm[i]), int(perm[j])) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return poset_from_pairs(n, pairs)


def random_interval_order(rng: np.random.Generator, n: int, span: int = 10) -> Poset:
    lo = rng.integers(0, span, size=n)
    hi = lo + rng.integers(0, span // 2 + 1, size=n)
    return Poset(hi[:, None] < lo[None, :])


def random_graph(rng: np.random.Generator, n: int, p: float = 0.4) -> SimpleGraph:
    upper = np.triu(rng.random((n, n)) < p, k=1)
    return SimpleGraph(upper | upper.T)


def random_lex_spec(rng: np.random.Generator, max_total: int = 14) -> LexSumSpec:
    """Index of 2..5 vertices (mostly an interval order), small components, at most ``max_total`` vertices."""
    k = int(rng.integers(2, 6))
    index = random_interval_order(rng, k, span=6) if rng.random() < 0.7 else random_poset(rng, k, 0.5)
    budget = max_total - k
    comps = []
    for _ in range(k):
        m = 1 + int(rng.integers(0, max(1, min(3, budget) + 1)))
        budget -= m - 1
        comps.append(random_poset(rng, m, 0.5) if rng.random() < 0.5 else antichain(m))
    return LexSumSpec(index, tuple(comps))


@st.composite
def posets(draw, max_n: int = 7):
    n = draw(st.integers(1, max_n))
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(slots), max_size=len(slots)))
    perm = draw(st.permutations(range(n)))
    return poset_from_pairs(n, [(perm[i], perm[j]) for (i, j), k in zip(slots, keep) if k])


@st.composite
def interval_orders(draw, max_n: int = 9):
    n = draw(st.integers(1, max_n))
    lo = np.array(draw(st.lists(st.integers(0, 8), min_size=n, max_size=n)))
    length = np.array(draw(st.lists(st.integers(0, 4), min_size=n, max_size=n)))
    hi = lo + length
    return Poset(hi[:, None] < lo[None, :])


@st.composite
def graphs(draw, max_n: int = 7):
    n = draw(st.integers(1, max_n))
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(slots), max_size=len(slots)))
    return SimpleGraph.from_edges(n, [e for e, k in zip(slots, keep) if k])
