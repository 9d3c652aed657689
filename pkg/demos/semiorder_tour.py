"""Walk through the semiorder I_n: antichains, representations, singular vertices, primality.

Run: python3 demos/semiorder_tour.py [N]
"""

from __future__ import annotations

import argparse

from iolab import oracle
from iolab.constructions import semiorder
from iolab.interval import am_chain, downset_interval_representation, singular_vertices, standard_representation
from iolab.modular import is_prime, module_tree


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("n", type=int, nargs="?", default=7)
    args = ap.parse_args()

    P = semiorder(args.n)
    labels = P.labels()
    chain = am_chain(P)
    print(f"I_{args.n}: i < j iff j - i >= 2")
    print(f"{len(chain)} maximal antichains, consecutive pairs:")
    print("  " + "  ".join("{" + ",".join(labels[v] for v in sorted(A)) + "}" for A in chain.antichains))

    for name, rep in [("standard", standard_representation(P)), ("down-set", downset_interval_representation(P))]:
        spans = " ".join(f"{labels[v]}:[{lo},{hi}]" for v, (lo, hi) in enumerate(rep.intervals))
        print(f"{name:9} {spans}  (represents order: {rep.represents(P)})")

    print("singular vertices:", sorted(singular_vertices(P)))
    tree = module_tree(P)
    print(f"root of the module tree: {tree.root.kind.label()}, prime: {is_prime(P, tree)}")
    if P.n <= 18:
        print(f"brute force agrees: {oracle.is_prime_bruteforce(P) == is_prime(P, tree)}")


if __name__ == "__main__":
    main()
