"""Brute-force reference implementations.

Everything here is exponential and guarded by :func:`iolab.poset.exhaustive_guard`.
The predicates are re-derived from their definitions over raw relation
matrices and share no code with the fast paths in ``interval`` and
``modular``; subset enumeration is vectorised over all ``2**n`` bitmasks.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .errors import SizeGuardError
from .poset import Poset, SimpleGraph, exhaustive_guard

SMALL_POSET_LIMIT = 5


def _relation(R) -> np.ndarray:
    return R.lt if isinstance(R, Poset) else R.adj


def _guard(R, guard, what):
    g = exhaustive_guard() if guard is None else guard
    if R.n > g:
        raise SizeGuardError(R.n, g, what)


def _all_masks(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.uint32)


def _row_bits(rel: np.ndarray) -> list[int]:
    return [int(sum(1 << j for j in range(rel.shape[1]) if rel[i, j])) for i in range(rel.shape[0])]


def _mask_set(m: int) -> frozenset[int]:
    return frozenset(i for i in range(m.bit_length()) if m >> i & 1)


def module_masks(R, guard: int | None = None) -> np.ndarray:
    """All modules (as bitmasks, including the empty set) by testing every subset."""
    _guard(R, guard, "module enumeration")
    rel = _relation(R)
    S = _all_masks(R.n)
    ok = np.ones(S.shape, dtype=bool)
    outs, ins = _row_bits(rel), _row_bits(rel.T)
    for x in range(R.n):
        inside = ((S >> np.uint32(x)) & np.uint32(1)).astype(bool)
        for row in (outs[x], ins[x]):
            hit = S & np.uint32(row)
            ok &= inside | (hit == 0) | (hit == S)
    return S[ok]


def all_modules(R, guard: int | None = None) -> set[frozenset[int]]:
    return {_mask_set(int(m)) for m in module_masks(R, guard)}


def strong_module_masks(R, guard: int | None = None) -> list[int]:
    mods = module_masks(R, guard)
    mods = mods[mods != 0]
    out = []
    for m in mods:
        inter = mods & m
        overlap = (inter != 0) & (inter != m) & (inter != mods)
        if not overlap.any():
            out.append(int(m))
    return out


def all_strong_modules(R, guard: int | None = None) -> set[frozenset[int]]:
    """Nonempty modules that overlap no other module."""
    return {_mask_set(m) for m in strong_module_masks(R, guard)}


def is_prime_bruteforce(R, guard: int | None = None) -> bool:
    """No nontrivial module; structures on two vertices are not counted as prime."""
    if R.n == 2:
        return False
    full = (1 << R.n) - 1
    return all(int(m).bit_count() <= 1 or int(m) == full for m in module_masks(R, guard))


def all_maximal_antichains(P: Poset, guard: int | None = None) -> set[frozenset[int]]:
    _guard(P, guard, "antichain enumeration")
    comp = P.lt | P.lt.T
    rows = _row_bits(comp)
    S = _all_masks(P.n)
    anti = S != 0
    maximal = np.ones(S.shape, dtype=bool)
    for x in range(P.n):
        inside = ((S >> np.uint32(x)) & np.uint32(1)).astype(bool)
        touches = (S & np.uint32(rows[x])) != 0
        anti &= ~(inside & touches)
        maximal &= inside | touches
    return {_mask_set(int(m)) for m in S[anti & maximal]}


def max_independent_size(G: SimpleGraph, guard: int | None = None) -> int:
    _guard(G, guard, "independent set enumeration")
    rows = _row_bits(G.adj)
    S = _all_masks(G.n)
    indep = np.ones(S.shape, dtype=bool)
    for x in range(G.n):
        inside = ((S >> np.uint32(x)) & np.uint32(1)).astype(bool)
        indep &= ~(inside & ((S & np.uint32(rows[x])) != 0))
    sizes = np.array([int(m).bit_count() for m in S[indep]])
    return int(sizes.max()) if sizes.size else 0


def maximal_independent_sets(G: SimpleGraph, guard: int | None = None) -> set[frozenset[int]]:
    _guard(G, guard, "independent set enumeration")
    rows = _row_bits(G.adj)
    S = _all_masks(G.n)
    indep = np.ones(S.shape, dtype=bool)
    maximal = np.ones(S.shape, dtype=bool)
    for x in range(G.n):
        inside = ((S >> np.uint32(x)) & np.uint32(1)).astype(bool)
        touches = (S & np.uint32(rows[x])) != 0
        indep &= ~(inside & touches)
        maximal &= inside | touches
    return {_mask_set(int(m)) for m in S[indep & maximal]}


def find_2plus2(P: Poset):
    """Scan all pairs of comparabilities for an induced 2+2; returns (a, b, c, d) or None."""
    lt = P.lt
    pairs = list(zip(*np.nonzero(lt)))
    for (a, b), (c, d) in itertools.combinations(pairs, 2):
        if len({a, b, c, d}) < 4:
            continue
        if not any(lt[u, v] or lt[v, u] for u in (a, b) for v in (c, d)):
            return (int(a), int(b), int(c), int(d))
    return None


def width_bruteforce(P: Poset, guard: int | None = None) -> int:
    return max((len(a) for a in all_maximal_antichains(P, guard)), default=0)


def exhaustive_small_posets(n: int) -> Iterator[Poset]:
    """Every labeled poset on ``n <= 5`` vertices.

    Each unordered pair is assigned one of (unrelated, i<j, j<i); the
    assignment is kept when it is transitive.
    """
    if not 0 <= n <= SMALL_POSET_LIMIT:
        raise SizeGuardError(n, SMALL_POSET_LIMIT, "labeled poset enumeration")
    slots = list(itertools.combinations(range(n), 2))
    for choice in itertools.product((0, 1, 2), repeat=len(slots)):
        lt = np.zeros((n, n), dtype=bool)
        for (i, j), c in zip(slots, choice):
            if c == 1:
                lt[i, j] = True
            elif c == 2:
                lt[j, i] = True
        li = lt.astype(np.uint8)
        if ((li @ li > 0) & ~lt).any():
            continue
        yield Poset(lt, check=False)


def instance_digest(R) -> str:
    rel = _relation(R)
    return hashlib.sha1(type(R).__name__.encode() + rel.tobytes() + bytes([R.n % 256])).hexdigest()[:12]


@dataclass(frozen=True)
class OracleReport:
    prop: str
    digest: str
    agreement: bool
    counterexample: dict | None = field(default=None)

    def __post_init__(self):
        if self.agreement != (self.counterexample is None):
            raise ValueError("counterexample must be present exactly when agreement is false")

    def __bool__(self):
        return self.agreement


def report(prop: str, R, expected, actual) -> OracleReport:
    """Compare an oracle value with a fast-path value."""
    if expected == actual:
        return OracleReport(prop, instance_digest(R), True)
    ce = {"oracle": _jsonable(expected), "fast": _jsonable(actual)}
    return OracleReport(prop, instance_digest(R), False, ce)


def _jsonable(v):
    if isinstance(v, (set, frozenset)):
        items = [_jsonable(x) for x in v]
        return sorted(items, key=lambda x: (len(x), x) if isinstance(x, list) else (0, x))
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def module_calculus_violations(R, guard: int | None = None) -> list[tuple[str, int, int]]:
    """Check the module calculus pairwise on the oracle's own module list.

    For modules M, N: M & N is a module; M | N is a module when they meet;
    N - M is a module when M - N is nonempty.  For posets every module is
    also convex.  Returns (rule, M, N) triples (bitmasks) that fail.
    """
    mods = [int(m) for m in module_masks(R, guard)]
    known = set(mods)
    bad = []
    for M in mods:
        for N in mods:
            if M & N not in known:
                bad.append(("intersection", M, N))
            if M & N and M | N not in known:
                bad.append(("union", M, N))
            if M & ~N and N & ~M not in known:
                bad.append(("difference", M, N))
    if isinstance(R, Poset):
        lt = R.lt
        for M in mods:
            inside = np.array([bool(M >> v & 1) for v in range(R.n)])
            # x outside M with u < x < v for some u, v in M
            between = lt[inside].any(axis=0) & lt[:, inside].any(axis=1) & ~inside
            if between.any():
                bad.append(("convex", M, M))
    return bad
