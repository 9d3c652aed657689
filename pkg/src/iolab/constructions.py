"""Generators for prime interval orders.

``semiorder(n)`` is the order i < j iff j - i >= 2 on 0..n-1, whose
incomparability graph is the path.  ``q_construction`` glues prime interval
orders in a row with one fresh vertex between consecutive blocks, and
``p_alpha_prefix`` materialises a finite piece of the rank-alpha family by
recursively feeding chain terms through it.

Vertex order of glued posets is block-major, each glue vertex right after
the block it sits above.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BudgetError, ContractError, NotIntervalOrderError, SpecError
from .interval import am_chain, is_interval_order, require_interval_order
from .modular import is_prime
from .ordinal import ChainTerm, FiniteChain, FiniteSum, Omega, OmegaSum
from .poset import Poset, incomparability_graph, min_elements, width

MIN_BLOCK = 4


def semiorder(n: int) -> Poset:
    if n < 1:
        raise ValueError("semiorder needs n >= 1")
    idx = np.arange(n)
    P = Poset(idx[None, :] - idx[:, None] >= 2, [str(i) for i in range(n)])
    path = {(i, i + 1) for i in range(n - 1)}
    if set(incomparability_graph(P).edges()) != path:
        raise ContractError("incomparability graph of I_n is not the path")
    return P


def incidence_bipartite(m: int) -> Poset:
    """Vertices (i, r), i in {0, 1}, r < m, stored at index i*m + r; (0,r) < (1,s) iff r < s."""
    if m < 1:
        raise ValueError("incidence_bipartite needs m >= 1")
    lt = np.zeros((2 * m, 2 * m), dtype=bool)
    for r in range(m):
        lt[r, m + r + 1:] = True
    P = Poset(lt, [f"{i}_{r}" for i in (0, 1) for r in range(m)])
    if not is_interval_order(P):
        raise ContractError("incidence bipartite poset is not an interval order")
    return P


def choose_anchor(P: Poset) -> int:
    """A minimal vertex whose up-set is largest among minimal vertices (lowest index on ties).

    In an interval order its up-set is everything that is not minimal.
    """
    require_interval_order(P)
    mins = sorted(min_elements(P))
    best = max(mins, key=lambda v: (P.up_masks[v].bit_count(), -v))
    non_min = P.full_mask & ~sum(1 << v for v in mins)
    if P.up_masks[best] != non_min:
        raise ContractError("anchor up-set is not the set of non-minimal vertices", f"vertex {best}")
    return best


# ---------------------------------------------------------------- Q-construction


@dataclass(frozen=True)
class QSpec:
    blocks: tuple[Poset, ...]
    anchors: tuple[int, ...] | None = None
    glue_labels: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        if len(self.blocks) < 2:
            raise SpecError("Q-construction needs at least two blocks")
        for i, b in enumerate(self.blocks):
            if b.n < MIN_BLOCK:
                raise SpecError(f"block {i} has {b.n} < {MIN_BLOCK} vertices")
            if not is_interval_order(b):
                raise SpecError(f"block {i} is not an interval order")
            if not is_prime(b):
                raise SpecError(f"block {i} is not prime")
        if self.anchors is None:
            object.__setattr__(self, "anchors", tuple(choose_anchor(b) for b in self.blocks))
        else:
            object.__setattr__(self, "anchors", tuple(self.anchors))
            if len(self.anchors) != len(self.blocks):
                raise SpecError("one anchor per block required")
            for i, (b, x) in enumerate(zip(self.blocks, self.anchors)):
                mins = min_elements(b)
                non_min = b.full_mask & ~sum(1 << v for v in mins)
                if x not in mins or b.up_masks[x] != non_min:
                    raise SpecError(f"anchor {x} of block {i} is not minimal with maximal up-set")
        if self.glue_labels is None:
            object.__setattr__(self, "glue_labels", tuple(f"y{i}" for i in range(len(self.blocks) - 1)))
        elif len(self.glue_labels) != len(self.blocks) - 1:
            raise SpecError("need exactly one glue label between consecutive blocks")


@dataclass(frozen=True)
class QLayout:
    """Where each block and glue vertex lands in the glued poset."""

    blocks: tuple[tuple[int, ...], ...]
    glue: tuple[int, ...]
    anchors: tuple[int, ...]


def q_layout(spec: QSpec) -> QLayout:
    blocks, glue, anchors = [], [], []
    start = 0
    for i, b in enumerate(spec.blocks):
        blocks.append(tuple(range(start, start + b.n)))
        anchors.append(start + spec.anchors[i])
        start += b.n
        if i < len(spec.blocks) - 1:
            glue.append(start)
            start += 1
    return QLayout(tuple(blocks), tuple(glue), tuple(anchors))


def expected_q_antichains(spec: QSpec, lay: QLayout) -> list[frozenset[int]]:
    """Maximal antichains of the glued poset, in order, predicted from the blocks.

    Block i contributes its own minimal antichain (holding the anchor) and
    every other maximal antichain B as B + {y_i} (B alone for the last
    block).  Between blocks i-1 and i there is one more antichain: y_{i-1}
    together with the minimal elements of block i other than its anchor.
    """
    out = []
    for i, (b, verts) in enumerate(zip(spec.blocks, lay.blocks)):
        x = spec.anchors[i]
        if i > 0:
            rest = {verts[v] for v in min_elements(b) if v != x}
            out.append(frozenset(rest | {lay.glue[i - 1]}))
        for A in am_chain(b).antichains:
            mapped = {verts[v] for v in A}
            if x not in A and i < len(lay.glue):
                mapped.add(lay.glue[i])
            out.append(frozenset(mapped))
    return out


def q_construction(spec: QSpec, *, verify: bool = True) -> Poset:
    """Linear sum of the blocks plus glue vertices with x_{i} < y_{i} < x_{i+1}, closed transitively.

    With ``verify`` the result is checked to be a prime interval order whose
    maximal antichains are exactly :func:`expected_q_antichains`.
    """
    lay = q_layout(spec)
    n = lay.blocks[-1][-1] + 1
    lt = np.zeros((n, n), dtype=bool)
    for i, (b, verts) in enumerate(zip(spec.blocks, lay.blocks)):
        lt[np.ix_(verts, verts)] = b.lt
        later = [v for blk in lay.blocks[i + 1:] for v in blk]
        lt[np.ix_(verts, later)] = True
    for i, y in enumerate(lay.glue):
        x_lo, x_hi = lay.anchors[i], lay.anchors[i + 1]
        below = [x_lo] + [v for blk in lay.blocks[:i + 1] for v in blk if lt[v, x_lo]]
        below += [v for blk in lay.blocks[:i] for v in blk]
        below += list(lay.glue[:i])
        above = [x_hi] + [v for v in range(n) if lt[x_hi, v]] + list(lay.glue[i + 1:])
        lt[below, y] = True
        lt[y, above] = True
    label_at = {}
    for i, b in enumerate(spec.blocks):
        for v in range(b.n):
            label_at[lay.blocks[i][v]] = f"b{i}:{b.label(v)}"
    for i, y in enumerate(lay.glue):
        label_at[y] = spec.glue_labels[i]
    Q = Poset(lt, [label_at[v] for v in range(n)])
    if verify:
        _verify_q(spec, lay, Q)
    return Q


def _verify_q(spec: QSpec, lay: QLayout, Q: Poset) -> None:
    if not is_interval_order(Q):
        raise ContractError("Q-construction output is not an interval order")
    if not is_prime(Q):
        raise ContractError("Q-construction output is not prime")
    for i, y in enumerate(lay.glue):
        touching = [v for v in lay.blocks[i] if Q.comparable(v, y)]
        if touching != [lay.anchors[i]]:
            raise ContractError("anchor is not the only block vertex comparable to its glue vertex", f"block {i}")
    got = list(am_chain(Q).antichains)
    want = expected_q_antichains(spec, lay)
    if got != want:
        raise ContractError("maximal antichains do not follow the block structure")


# ---------------------------------------------------------------- P_alpha prefixes


@dataclass(frozen=True)
class PrefixPlan:
    """Budget allocation for a chain term.

    A leaf plan (``blocks == ()``) becomes ``semiorder(size)``; otherwise the
    blocks are glued by the Q-construction.
    """

    term: ChainTerm
    budget: int
    size: int
    blocks: tuple["PrefixPlan", ...] = field(default=())

    @property
    def is_leaf(self) -> bool:
        return not self.blocks

    def am_length(self) -> int:
        """Predicted number of maximal antichains of the materialised poset."""
        if self.is_leaf:
            return max(self.size - 1, 1)
        return sum(b.am_length() for b in self.blocks) + len(self.blocks) - 1

    def depth(self) -> int:
        return 0 if self.is_leaf else 1 + max(b.depth() for b in self.blocks)

    def leaves(self) -> list["PrefixPlan"]:
        return [self] if self.is_leaf else [lf for b in self.blocks for lf in b.leaves()]


def min_size(term: ChainTerm) -> int:
    """Fewest vertices with which ``term`` can be materialised as a prime block."""
    if isinstance(term, FiniteChain):
        return term.k + 1
    if isinstance(term, Omega):
        return MIN_BLOCK
    if isinstance(term, FiniteSum):
        return sum(_block_min(p) for p in term.parts) + len(term.parts) - 1
    # an omega-sum must show at least two of its summands to keep its rank
    return _block_min(term.summand(0)) + 1 + _block_min(term.summand(1))


def _block_min(term: ChainTerm) -> int:
    m = min_size(term)
    if m < MIN_BLOCK:
        raise BudgetError(f"{term!r} gives a block of {m} < {MIN_BLOCK} vertices")
    return m


def _max_size(term: ChainTerm) -> int | None:
    if isinstance(term, FiniteChain):
        return term.k + 1
    if isinstance(term, FiniteSum):
        caps = [_max_size(p) for p in term.parts]
        return None if None in caps else sum(caps) + len(caps) - 1
    return None


def _spread(mins: list[int], caps: list[int | None], total: int) -> list[int]:
    """Start every block at its minimum and hand out the rest one vertex at a time
    to the currently smallest uncapped block (earliest on ties)."""
    sizes = list(mins)
    left = total - sum(sizes)
    while left > 0:
        open_ = [i for i in range(len(sizes)) if caps[i] is None or sizes[i] < caps[i]]
        if not open_:
            break
        i = min(open_, key=lambda j: (sizes[j], j))
        sizes[i] += 1
        left -= 1
    return sizes


def plan_prefix(term: ChainTerm, budget: int) -> PrefixPlan:
    if isinstance(term, Omega):
        return PrefixPlan(term, budget, budget)
    if isinstance(term, FiniteChain):
        return PrefixPlan(term, budget, min(term.k + 1, budget))
    if isinstance(term, FiniteSum):
        parts = list(term.parts)
    elif isinstance(term, OmegaSum):
        parts = []
        used = -1
        while True:
            nxt = term.summand(len(parts))
            need = _block_min(nxt) + 1
            if used + need > budget:
                break
            parts.append(nxt)
            used += need
        if len(parts) < 2:
            # too small for two blocks: the prefix stays inside the first one
            return plan_prefix(term.summand(0), budget)
    else:
        raise TypeError(f"not a chain term: {term!r}")
    mins = [_block_min(p) for p in parts]
    room = budget - (len(parts) - 1)
    if sum(mins) > room:
        raise BudgetError(f"budget {budget} cannot hold {len(parts)} blocks of at least {mins} vertices")
    sizes = _spread(mins, [_max_size(p) for p in parts], room)
    blocks = tuple(plan_prefix(p, s) for p, s in zip(parts, sizes))
    return PrefixPlan(term, budget, sum(b.size for b in blocks) + len(blocks) - 1, blocks)


def materialize(plan: PrefixPlan) -> Poset:
    if plan.is_leaf:
        return semiorder(plan.size)
    return q_construction(QSpec(tuple(materialize(b) for b in plan.blocks)), verify=False)


def p_alpha_prefix(term: ChainTerm, budget: int) -> Poset:
    """A finite prime interval order approximating the chain term within ``budget`` vertices.

    The result is checked against its plan: interval order, antichain chain
    length as predicted, width at most (leaf width + nesting depth).
    """
    if budget < MIN_BLOCK:
        raise BudgetError(f"budget must be at least {MIN_BLOCK}")
    plan = plan_prefix(term, budget)
    P = materialize(plan)
    if P.n != plan.size or P.n > budget:
        raise ContractError("materialised size differs from plan", f"{P.n} vs {plan.size}")
    try:
        chain = am_chain(P)
    except NotIntervalOrderError as e:
        raise ContractError("prefix is not an interval order", str(e.witness)) from e
    if len(chain) != plan.am_length():
        raise ContractError("antichain chain length differs from plan", f"{len(chain)} vs {plan.am_length()}")
    leaf_width = max(min(lf.size, 2) for lf in plan.leaves())
    if width(P) > leaf_width + plan.depth():
        raise ContractError("width exceeds leaf width plus nesting depth")
    return P
