"""Interval orders, modular decomposition, and prime interval orders built to a given rank."""

from __future__ import annotations

from .constructions import (
    PrefixPlan,
    QSpec,
    choose_anchor,
    incidence_bipartite,
    p_alpha_prefix,
    plan_prefix,
    q_construction,
    semiorder,
)
from .errors import (
    BudgetError,
    ContractError,
    CycleError,
    IolabError,
    NotIntervalOrderError,
    NotLimitError,
    ParseError,
    SizeGuardError,
    SpecError,
)
from .interval import (
    AMChain,
    IntervalRepresentation,
    LexSumSpec,
    am_chain,
    doubly_critical_pairs,
    downset_interval_representation,
    is_interval_order,
    is_valid_interval_lex_sum,
    lex_sum,
    singular_vertices,
    standard_representation,
    two_plus_two,
)
from .modular import (
    Kind,
    ModuleTree,
    decompose_interval_order,
    is_module,
    is_prime,
    kelly_check,
    module_tree,
    recompose,
    robust_hull,
    strong_modules,
)
from .ordinal import (
    FiniteChain,
    FiniteSum,
    Omega,
    OmegaSum,
    Ordinal,
    canonical_term,
    fundamental_sequence,
    ord_parse,
    ord_show,
    rank,
)
from .poset import (
    Poset,
    SimpleGraph,
    antichain,
    chain,
    comparability_graph,
    incomparability_graph,
    poset_from_pairs,
    width,
)
from .textio import format_structure, parse_structure, read_structure, write_structure

__all__ = [
    "AMChain",
    "BudgetError",
    "ContractError",
    "CycleError",
    "FiniteChain",
    "FiniteSum",
    "IntervalRepresentation",
    "IolabError",
    "Kind",
    "LexSumSpec",
    "ModuleTree",
    "NotIntervalOrderError",
    "NotLimitError",
    "Omega",
    "OmegaSum",
    "Ordinal",
    "ParseError",
    "Poset",
    "PrefixPlan",
    "QSpec",
    "SimpleGraph",
    "SizeGuardError",
    "SpecError",
    "am_chain",
    "antichain",
    "canonical_term",
    "chain",
    "choose_anchor",
    "comparability_graph",
    "decompose_interval_order",
    "doubly_critical_pairs",
    "downset_interval_representation",
    "format_structure",
    "fundamental_sequence",
    "incidence_bipartite",
    "incomparability_graph",
    "is_interval_order",
    "is_module",
    "is_prime",
    "is_valid_interval_lex_sum",
    "kelly_check",
    "lex_sum",
    "module_tree",
    "ord_parse",
    "ord_show",
    "p_alpha_prefix",
    "parse_structure",
    "plan_prefix",
    "poset_from_pairs",
    "q_construction",
    "rank",
    "read_structure",
    "recompose",
    "robust_hull",
    "semiorder",
    "singular_vertices",
    "standard_representation",
    "strong_modules",
    "two_plus_two",
    "width",
    "write_structure",
]

__version__ = "0.1.0"
