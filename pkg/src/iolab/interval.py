"""Interval orders: recognition, the chain of maximal antichains, interval
representations, singular vertices and lexicographical sums."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Sequence

import numpy as np

from ._bitset import bits, mask_of, maximal_cliques, to_set
from .errors import ContractError, NotIntervalOrderError, SpecError
from .poset import Poset, is_antichain, is_antichain_set, maximal_antichain_masks


# ---------------------------------------------------------------- recognition


def _nested_witness(P: Poset, masks: list[int], up: bool):
    """Check that ``masks`` (up-sets or down-sets) form a chain under inclusion.

    Returns None, or a 2+2 witness (a, b, c, d) with a<b, c<d.
    """
    order = sorted(range(P.n), key=lambda v: masks[v].bit_count())
    for x, y in zip(order, order[1:]):
        if masks[x] & ~masks[y]:
            b = next(bits(masks[x] & ~masks[y]))
            d = next(bits(masks[y] & ~masks[x]))
            return (x, b, y, d) if up else (b, x, d, y)
    return None


def two_plus_two(P: Poset):
    """A 2+2 witness ``(a, b, c, d)`` (a<b, c<d, all cross pairs incomparable) or None."""
    return _nested_witness(P, P.up_masks, up=True)


def is_interval_order(P: Poset) -> bool:
    """True iff P has no induced 2+2.

    Decided by nestedness of the up-sets and, independently, of the down-sets;
    the two must agree.
    """
    w_up = _nested_witness(P, P.up_masks, up=True)
    w_down = _nested_witness(P, P.down_masks, up=False)
    if (w_up is None) != (w_down is None):
        raise ContractError("up-set and down-set characterizations disagree", f"{w_up} vs {w_down}")
    return w_up is None


def require_interval_order(P: Poset) -> None:
    w = two_plus_two(P)
    if w is not None:
        raise NotIntervalOrderError(w)


def upsets_form_chain(P: Poset) -> bool:
    return _nested_witness(P, P.up_masks, up=True) is None


def downsets_form_chain(P: Poset) -> bool:
    return _nested_witness(P, P.down_masks, up=False) is None


# ---------------------------------------------------------------- maximal antichains


def antichain_leq(P: Poset, a: int, b: int) -> bool:
    """Order on antichains: every element of ``a`` is below or equal to some element of ``b``."""
    for x in bits(a):
        if not (b & (P.up_masks[x] | 1 << x)):
            return False
    return True


def _compare(P: Poset):
    def cmp(a: int, b: int) -> int:
        if a == b:
            return 0
        ab, ba = antichain_leq(P, a, b), antichain_leq(P, b, a)
        if ab and ba:
            raise ContractError("antichain order is not antisymmetric", f"{to_set(a)} vs {to_set(b)}")
        if not (ab or ba):
            raise ContractError("maximal antichains are incomparable", f"{sorted(to_set(a))} vs {sorted(to_set(b))}")
        return -1 if ab else 1

    return cmp


@dataclass(frozen=True)
class AMChain:
    """Maximal antichains of an interval order in increasing order.

    ``membership[x] == (lo, hi)`` means x lies in antichains ``lo..hi``.
    """

    antichains: tuple[frozenset[int], ...]
    membership: tuple[tuple[int, int], ...]

    def __len__(self):
        return len(self.antichains)

    def to_json(self, labels: Sequence[str] | None = None) -> dict:
        lab = (lambda v: labels[v]) if labels else str
        return {
            "antichains": [[lab(v) for v in sorted(a)] for a in self.antichains],
            "membership": {lab(v): list(r) for v, r in enumerate(self.membership)},
        }


def sorted_maximal_antichains(P: Poset) -> list[int]:
    masks = maximal_antichain_masks(P)
    cmp = _compare(P)
    out = sorted(masks, key=cmp_to_key(cmp))
    # the order must be total, not just consistent along the sort path
    for i in range(len(out)):
        for j in range(i + 1, len(out)):
            if cmp(out[i], out[j]) >= 0:
                raise ContractError("antichain order is not total", f"positions {i}, {j}")
    return out


def am_chain(P: Poset) -> AMChain:
    require_interval_order(P)
    masks = sorted_maximal_antichains(P)
    membership = []
    for v in range(P.n):
        pos = [k for k, m in enumerate(masks) if m >> v & 1]
        if not pos or pos != list(range(pos[0], pos[-1] + 1)):
            raise ContractError("membership is not a contiguous range", f"vertex {v}: {pos}")
        membership.append((pos[0], pos[-1]))
    return AMChain(tuple(to_set(m) for m in masks), tuple(membership))


# ---------------------------------------------------------------- representations


@dataclass(frozen=True)
class IntervalRepresentation:
    """Vertex ``v`` is sent to positions ``intervals[v] = (lo, hi)`` of a chain of ``chain_length``."""

    chain_length: int
    intervals: tuple[tuple[int, int], ...]

    def is_injective(self) -> bool:
        return len(set(self.intervals)) == len(self.intervals)

    def covers_chain(self) -> bool:
        covered = np.zeros(self.chain_length, dtype=bool)
        for lo, hi in self.intervals:
            covered[lo:hi + 1] = True
        return bool(covered.all())

    def violations(self, P: Poset) -> list[tuple[int, int]]:
        """Pairs (x, y) where ``x < y`` and ``hi(x) < lo(y)`` disagree."""
        lo = np.array([iv[0] for iv in self.intervals])
        hi = np.array([iv[1] for iv in self.intervals])
        before = hi[:, None] < lo[None, :]
        bad = np.argwhere(before != P.lt)
        return [(int(a), int(b)) for a, b in bad]

    def represents(self, P: Poset) -> bool:
        return (
            len(self.intervals) == P.n
            and all(0 <= lo <= hi < self.chain_length for lo, hi in self.intervals)
            and not self.violations(P)
        )

    def to_json(self, labels: Sequence[str] | None = None) -> dict:
        lab = (lambda v: labels[v]) if labels else str
        return {
            "chain_length": self.chain_length,
            "intervals": {lab(v): list(iv) for v, iv in enumerate(self.intervals)},
        }


def doubly_critical_pairs(P: Poset) -> set[tuple[int, int]]:
    """Pairs {a, b} (a < b as indices) that are both an antichain and a module."""
    out = set()
    for a in range(P.n):
        for b in range(a + 1, P.n):
            if P.comparable(a, b):
                continue
            if P.up_masks[a] == P.up_masks[b] and P.down_masks[a] == P.down_masks[b]:
                out.add((a, b))
    return out


def standard_representation(P: Poset) -> IntervalRepresentation:
    """Each vertex goes to the range of maximal antichains containing it."""
    chain = am_chain(P)
    return IntervalRepresentation(len(chain), chain.membership)


def discrimination_report(rep: IntervalRepresentation) -> dict[str, bool]:
    """The three discriminating conditions for a family of intervals of a finite chain.

    ``finite_intersection`` is checked directly: every maximal pairwise
    intersecting subfamily must have a common point.
    """
    ivs = sorted(set(rep.intervals))
    covers = rep.covers_chain()
    separated = True
    for p in range(rep.chain_length):
        for q in range(p + 1, rep.chain_length):
            if not any(hi_a < lo_b and lo_a <= p <= hi_a and lo_b <= q <= hi_b
                       for lo_a, hi_a in ivs for lo_b, hi_b in ivs):
                separated = False
    k = len(ivs)
    nbrs = [mask_of(j for j in range(k) if j != i and ivs[i][0] <= ivs[j][1] and ivs[j][0] <= ivs[i][1])
            for i in range(k)]
    fip = all(
        max(ivs[i][0] for i in bits(c)) <= min(ivs[i][1] for i in bits(c))
        for c in maximal_cliques(nbrs, (1 << k) - 1)
    )
    return {"covers": covers, "separated": separated, "finite_intersection": fip}


def downset_interval_representation(P: Poset) -> IntervalRepresentation:
    """Intervals over the chain of distinct down-sets.

    ``x`` is sent to ``[D(x), D(U(x)))`` where ``D(U(x))`` is the intersection
    of the down-sets of the successors of ``x`` (the whole vertex set when x is
    maximal, which sits one past the last position).  Vertices sharing both
    down-set and up-set (doubly critical groups) then receive identical
    intervals; each such group gets its start position split into ``|A|``
    consecutive positions, ordered by vertex index.
    """
    require_interval_order(P)
    downs = sorted(set(P.down_masks), key=int.bit_count)
    for a, b in zip(downs, downs[1:]):
        if a & ~b:
            raise ContractError("down-sets are not nested")
    rank = {d: k for k, d in enumerate(downs)}
    L = len(downs)
    full = P.full_mask
    lo, hi = [], []
    for x in range(P.n):
        meet = full
        for y in bits(P.up_masks[x]):
            meet &= P.down_masks[y]
        lo.append(rank[P.down_masks[x]])
        hi.append((rank[meet] if meet != full else L) - 1)
    groups: dict[tuple[int, int], list[int]] = {}
    for x in range(P.n):
        groups.setdefault((P.down_masks[x], P.up_masks[x]), []).append(x)
    twins = sorted((g for g in groups.values() if len(g) > 1), key=min)
    for group in twins:
        p = lo[group[0]]
        extra = len(group) - 1
        for v in range(P.n):
            if v in group:
                continue
            if lo[v] > p:
                lo[v] += extra
            if hi[v] >= p:
                hi[v] += extra
        h = hi[group[0]] + extra
        for i, v in enumerate(sorted(group)):
            lo[v], hi[v] = p + i, h
        L += extra
    return IntervalRepresentation(L, tuple(zip(lo, hi)))


# ---------------------------------------------------------------- singular vertices


def singular_vertices(P: Poset) -> frozenset[int]:
    """Vertices whose incomparables form an antichain."""
    return frozenset(x for x in range(P.n) if is_antichain_set(P, P.inc_mask(x)))


def singular_vertices_by_antichains(P: Poset) -> frozenset[int]:
    """Vertices lying in exactly one maximal antichain (agrees with the above on interval orders)."""
    count = [0] * P.n
    for m in maximal_antichain_masks(P):
        for v in bits(m):
            count[v] += 1
    return frozenset(v for v in range(P.n) if count[v] == 1)


# ---------------------------------------------------------------- lexicographical sums


@dataclass(frozen=True)
class LexSumSpec:
    index: Poset
    components: tuple[Poset, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if self.index.n < 2:
            raise SpecError("index poset needs at least 2 vertices")
        if len(self.components) != self.index.n:
            raise SpecError(f"{len(self.components)} components for an index of size {self.index.n}")
        for i, c in enumerate(self.components):
            if c.n == 0:
                raise SpecError(f"component at index {i} is empty")

    def blocks(self) -> list[list[int]]:
        """Vertex ids of each component inside the sum (block-major)."""
        out, start = [], 0
        for c in self.components:
            out.append(list(range(start, start + c.n)))
            start += c.n
        return out


def lex_sum(spec: LexSumSpec) -> Poset:
    blocks = spec.blocks()
    n = sum(c.n for c in spec.components)
    lt = np.zeros((n, n), dtype=bool)
    Q = spec.index
    for i, (bi, ci) in enumerate(zip(blocks, spec.components)):
        lt[np.ix_(bi, bi)] = ci.lt
        for j in bits(Q.up_masks[i]):
            lt[np.ix_(bi, blocks[j])] = True
    names = None
    if Q.names or any(c.names for c in spec.components):
        names = [f"{Q.label(i)}.{c.label(v)}" for i, c in enumerate(spec.components) for v in range(c.n)]
    return Poset(lt, names, check=False)


@dataclass(frozen=True)
class LexSumVerdict:
    valid: bool
    reason: str

    def __bool__(self):
        return self.valid


def is_valid_interval_lex_sum(spec: LexSumSpec) -> LexSumVerdict:
    """Decide whether the lexicographical sum is an interval order without building it.

    Besides Q and every component being interval orders, each non-antichain
    component needs a singular index, and no two non-antichain components
    may sit at incomparable indices (their chains would form a 2+2).  The
    second condition is implied by the first when Q is prime, and it is the
    whole story when Q is an antichain.
    """
    Q = spec.index
    if not is_interval_order(Q):
        return LexSumVerdict(False, "index is not an interval order")
    for i, c in enumerate(spec.components):
        if not is_interval_order(c):
            return LexSumVerdict(False, f"component {i} is not an interval order")
    thick = [i for i, c in enumerate(spec.components) if not is_antichain(c)]
    for a, i in enumerate(thick):
        for j in thick[a + 1:]:
            if not Q.comparable(i, j):
                return LexSumVerdict(False, f"components {i} and {j} are not antichains and sit at incomparable indices")
    if is_antichain(Q):
        return LexSumVerdict(True, "index is an antichain with at most one non-antichain component")
    sing = singular_vertices(Q)
    for i in thick:
        if i not in sing:
            return LexSumVerdict(False, f"component {i} is not an antichain at non-singular index {i}")
    return LexSumVerdict(True, "every non-antichain component sits at a singular index")
