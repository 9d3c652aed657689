"""Finite prefixes of the rank-alpha family for a few ordinals and budgets."""

from __future__ import annotations

import argparse

from iolab.constructions import p_alpha_prefix, plan_prefix
from iolab.interval import am_chain
from iolab.modular import is_prime
from iolab.ordinal import canonical_term, ord_parse, rank, show_term
from iolab.poset import width


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ordinals", nargs="+", default=["0", "1", "2", "w"])
    ap.add_argument("--budgets", nargs="+", type=int, default=[12, 24, 40])
    args = ap.parse_args()

    print(f"{'alpha':6} {'budget':>6} {'n':>4} {'depth':>5} {'width':>5} {'antichains':>10}  prime")
    for text in args.ordinals:
        term = canonical_term(ord_parse(text))
        assert rank(term) == ord_parse(text)
        print(f"# {text}: {show_term(term)}")
        for b in args.budgets:
            plan = plan_prefix(term, b)
            P = p_alpha_prefix(term, b)
            print(f"{text:6} {b:6d} {P.n:4d} {plan.depth():5d} {width(P):5d} {len(am_chain(P)):10d}  {is_prime(P)}")


if __name__ == "__main__":
    main()
