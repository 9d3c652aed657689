"""Modules, the tree of strong modules and the decomposition of interval orders.

Works on any structure exposing ``n``, ``out_masks`` and ``in_masks``
(:class:`~iolab.poset.Poset` or :class:`~iolab.poset.SimpleGraph`).
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from ._bitset import bits, components, mask_of, maximal_cliques, to_set
from .errors import ContractError, SpecError
from .interval import (
    LexSumSpec,
    lex_sum,
    require_interval_order,
    singular_vertices,
)
from .poset import Poset, SimpleGraph, comparability_graph, is_antichain, is_chain


class Kind(enum.Enum):
    LEAF = "leaf"
    PRIME = "prime"
    LINEAR = "linear"
    EDGE_FREE = "edge-free"
    COMPLETE = "complete"

    def label(self) -> str:
        """Name used in emitted documents; the schema has no separate edge-free/linear names."""
        if self is Kind.LINEAR:
            return "chain"
        if self is Kind.EDGE_FREE:
            return "antichain"
        return self.value


def _as_mask(S) -> int:
    return S if isinstance(S, int) else mask_of(S)


def _distinguishes(R, x: int, m: int) -> bool:
    o = R.out_masks[x] & m
    i = R.in_masks[x] & m
    return (o != 0 and o != m) or (i != 0 and i != m)


def is_module(R, S: Iterable[int] | int) -> bool:
    """True iff every vertex outside S relates to all of S in the same way."""
    m = _as_mask(S)
    if m & ~R.full_mask:
        raise IndexError("module candidate has vertices out of range")
    return not any(_distinguishes(R, x, m) for x in bits(R.full_mask & ~m))


def smallest_module(R, F: Iterable[int] | int, within: int | None = None) -> frozenset[int]:
    return to_set(_smallest_module_mask(R, _as_mask(F), R.full_mask if within is None else within))


def _smallest_module_mask(R, m: int, within: int) -> int:
    if not m:
        raise ValueError("smallest_module needs a nonempty vertex set")
    changed = True
    while changed:
        changed = False
        for x in bits(within & ~m):
            if _distinguishes(R, x, m):
                m |= 1 << x
                changed = True
    return m


# ---------------------------------------------------------------- the tree


@dataclass
class ModuleNode:
    vertices: frozenset[int]
    kind: Kind
    children: list["ModuleNode"] = field(default_factory=list)
    quotient: Poset | SimpleGraph | None = None

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()

    def depth(self) -> int:
        return 1 + max((c.depth() for c in self.children), default=0)


@dataclass
class ModuleTree:
    root: ModuleNode
    poset_view: bool

    def nodes(self) -> list[ModuleNode]:
        return list(self.root.walk())

    def node_sets(self) -> set[frozenset[int]]:
        return {nd.vertices for nd in self.root.walk()}

    def to_json(self, labels: Sequence[str] | None = None) -> dict:
        lab = (lambda v: labels[v]) if labels else (lambda v: v)

        def enc(nd: ModuleNode) -> dict:
            return {
                "vertices": [lab(v) for v in sorted(nd.vertices)],
                "kind": nd.kind.label(),
                "children": [enc(c) for c in nd.children],
            }

        return enc(self.root)

    def to_dot(self, labels: Sequence[str] | None = None, name: str = "modules") -> str:
        lab = (lambda v: labels[v]) if labels else str
        lines = [f'digraph "{name}" {{', "  node [shape=box];"]
        ids: dict[int, str] = {}
        for k, nd in enumerate(self.root.walk()):
            ids[id(nd)] = f"n{k}"
            text = nd.kind.label() + ": " + " ".join(lab(v) for v in sorted(nd.vertices))
            lines.append(f'  "n{k}" [label={json.dumps(text)}];')
        for nd in self.root.walk():
            for c in nd.children:
                lines.append(f'  "{ids[id(nd)]}" -> "{ids[id(c)]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _sym(R) -> list[int]:
    return [R.out_masks[v] | R.in_masks[v] for v in range(R.n)]


def _quotient(R, child_masks: list[int]):
    reps = [next(bits(c)) for c in child_masks]
    if isinstance(R, Poset):
        return Poset(R.lt[np.ix_(reps, reps)], check=False)
    return SimpleGraph(R.adj[np.ix_(reps, reps)], check=False)


def _prime_children(R, node: int) -> list[int]:
    """Maximal proper modules of a node whose structure and complement are both connected.

    These partition the node; x and y share one iff the least module
    containing them is proper.
    """
    out = []
    left = node
    while left:
        x = next(bits(left))
        cls = 1 << x
        for y in bits(node & ~(1 << x)):
            if _smallest_module_mask(R, (1 << x) | (1 << y), node) != node:
                cls |= 1 << y
        if cls & ~left:
            raise ContractError("maximal proper modules are not disjoint", f"class of {x} = {sorted(to_set(cls))}")
        out.append(cls)
        left &= ~cls
    for c in out:
        if any(_distinguishes(R, x, c) for x in bits(node & ~c)):
            raise ContractError("prime-node child is not a module", str(sorted(to_set(c))))
    return out


def _linear_order(R, kids: list[int]) -> list[int]:
    """Order the co-components of a series node bottom-up (posets only)."""
    def below_count(c):
        v = next(bits(c))
        return sum(1 for d in kids if d != c and R.out_masks[next(bits(d))] >> v & 1)

    return sorted(kids, key=below_count)


def _build(R, node: int, sym: list[int], cosym: list[int]) -> ModuleNode:
    verts = to_set(node)
    if node.bit_count() == 1:
        return ModuleNode(verts, Kind.LEAF)
    parts = components(sym, node)
    if len(parts) > 1:
        kind = Kind.EDGE_FREE
    else:
        parts = components(cosym, node)
        if len(parts) > 1:
            if isinstance(R, Poset):
                kind = Kind.LINEAR
                parts = _linear_order(R, parts)
            else:
                kind = Kind.COMPLETE
        else:
            kind = Kind.PRIME
            parts = _prime_children(R, node)
    children = [_build(R, p, sym, cosym) for p in parts]
    return ModuleNode(verts, kind, children, _quotient(R, parts))


def module_tree(R) -> ModuleTree:
    """Gallai decomposition into strong modules.

    A node splits into the connected components of the structure when that is
    disconnected (edge-free quotient), else into the components of the
    complement (linear/complete quotient), else into its maximal proper
    modules (prime quotient).
    """
    if R.n < 1:
        raise ValueError("module_tree needs at least one vertex")
    sym = _sym(R)
    full = R.full_mask
    cosym = [full & ~(sym[v] | 1 << v) for v in range(R.n)]
    root = _build(R, full, sym, cosym)
    if root.depth() > R.n:
        raise ContractError("tree deeper than vertex count")
    return ModuleTree(root, isinstance(R, Poset))


def strong_modules(R) -> set[frozenset[int]]:
    return module_tree(R).node_sets()


def robust_hull(R, F: Iterable[int], tree: ModuleTree | None = None) -> frozenset[int]:
    """Least strong module containing F: the deepest tree node containing it."""
    f = frozenset(F)
    if not f:
        raise ValueError("robust_hull needs a nonempty vertex set")
    node = (tree or module_tree(R)).root
    if not f <= node.vertices:
        raise IndexError("vertex set not contained in the structure")
    while True:
        nxt = next((c for c in node.children if f <= c.vertices), None)
        if nxt is None:
            return node.vertices
        node = nxt


def is_prime(R, tree: ModuleTree | None = None) -> bool:
    """No nontrivial module.  One vertex counts as prime, two vertices do not."""
    root = (tree or module_tree(R)).root
    if root.kind is Kind.LEAF:
        return True
    return root.kind is Kind.PRIME and all(c.kind is Kind.LEAF for c in root.children)


def kelly_check(P: Poset) -> bool:
    """A poset is prime exactly when its comparability graph is."""
    return is_prime(P) == is_prime(comparability_graph(P))


def node_quotient_kind_ok(node: ModuleNode) -> bool:
    """Check a node's quotient directly against its recorded kind."""
    q = node.quotient
    if node.kind is Kind.LEAF:
        return q is None and len(node.vertices) == 1
    rel = q.lt if isinstance(q, Poset) else q.adj
    sym = rel | rel.T
    off = ~np.eye(q.n, dtype=bool)
    if node.kind is Kind.EDGE_FREE:
        return not sym.any()
    if node.kind is Kind.COMPLETE:
        return bool(sym[off].all())
    if node.kind is Kind.LINEAR:
        return isinstance(q, Poset) and is_chain(q)
    return q.n >= 4 and is_prime(q)


# ---------------------------------------------------------------- antichain height


def antichain_height(G: SimpleGraph, within: int | None = None) -> int:
    """Size of a maximum independent set (of the subgraph induced on ``within``)."""
    universe = G.full_mask if within is None else within
    co = [G.full_mask & ~(G.nbr_masks[v] | 1 << v) for v in range(G.n)]
    return max((c.bit_count() for c in maximal_cliques(co, universe)), default=0)


def rank_inc_check(G: SimpleGraph) -> bool:
    """Every vertex's non-neighbourhood has strictly smaller independence number than G."""
    ht = antichain_height(G)
    full = G.full_mask
    return all(antichain_height(G, full & ~(G.nbr_masks[v] | 1 << v)) < ht for v in range(G.n))


# ---------------------------------------------------------------- interval-order decomposition


@dataclass(frozen=True)
class IntervalDecomposition:
    """P as a lexicographical sum over its root quotient.

    ``index_kind`` is ``"chain"``, ``"antichain"`` or ``"prime"``;
    ``blocks[i]`` lists the original vertices of ``components[i]`` in order.
    """

    index: Poset
    index_kind: str
    components: tuple[Poset, ...]
    blocks: tuple[tuple[int, ...], ...]
    singular_indices: frozenset[int]

    def shape_ok(self) -> bool:
        thick = [i for i, c in enumerate(self.components) if not is_antichain(c)]
        if self.index_kind == "chain":
            return is_chain(self.index)
        if self.index_kind == "antichain":
            return is_antichain(self.index) and len(thick) <= 1
        if self.index_kind == "prime":
            return (self.index.n >= 4 and is_prime(self.index)
                    and all(i in self.singular_indices for i in thick))
        return False

    def summary(self, labels: Sequence[str] | None = None) -> dict:
        lab = (lambda v: labels[v]) if labels else (lambda v: v)
        return {
            "index_kind": self.index_kind,
            "index_size": self.index.n,
            "components": [[lab(v) for v in b] for b in self.blocks],
            "singular_indices": sorted(self.singular_indices),
        }


def decompose_interval_order(P: Poset) -> IntervalDecomposition:
    require_interval_order(P)
    if P.n < 2:
        raise ValueError("decomposition needs at least two vertices")
    root = module_tree(P).root
    blocks = tuple(tuple(sorted(c.vertices)) for c in root.children)
    comps = tuple(P.induced(b) for b in blocks)
    Q = root.quotient
    kind = {Kind.LINEAR: "chain", Kind.EDGE_FREE: "antichain", Kind.PRIME: "prime"}[root.kind]
    thick = [i for i, c in enumerate(comps) if not is_antichain(c)]
    sing = singular_vertices(Q) if kind == "prime" else frozenset()
    if kind == "antichain" and len(thick) > 1:
        raise ContractError("antichain index with two non-antichain components", f"components {thick[0]} and {thick[1]}")
    if kind == "prime":
        bad = [i for i in thick if i not in sing]
        if bad:
            raise ContractError("non-antichain component at a non-singular index", f"index {bad[0]}")
    return IntervalDecomposition(Q, kind, comps, blocks, sing)


def recompose(d: IntervalDecomposition) -> Poset:
    """Lexicographical sum of the decomposition, with the original vertex numbering restored."""
    if len(d.components) != d.index.n or len(d.blocks) != d.index.n:
        raise SpecError("decomposition has mismatched index and components")
    S = lex_sum(LexSumSpec(d.index, d.components))
    order = [v for b in d.blocks for v in b]
    if sorted(order) != list(range(S.n)):
        raise SpecError("blocks do not partition the vertex set")
    lt = np.zeros((S.n, S.n), dtype=bool)
    lt[np.ix_(order, order)] = S.lt
    return Poset(lt, check=False)
