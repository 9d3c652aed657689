"""Command-line front end.

Exit status: 0 on success, 1 when a contract or invariant is violated,
2 on unreadable input (parse errors, cycles, bad arguments).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import oracle
from .checks import verify
from .constructions import incidence_bipartite, p_alpha_prefix, semiorder
from .errors import (
    BudgetError,
    ContractError,
    CycleError,
    IolabError,
    NotIntervalOrderError,
    ParseError,
    SizeGuardError,
    SpecError,
)
from .interval import (
    am_chain,
    downset_interval_representation,
    singular_vertices,
    standard_representation,
    two_plus_two,
)
from .modular import decompose_interval_order, module_tree
from .ordinal import canonical_term, ord_parse
from .poset import Poset
from .textio import format_structure, read_structure

DEFAULT_SEED = 20240601

EXIT_OK, EXIT_CONTRACT, EXIT_PARSE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    """Bad arguments count as unreadable input."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_PARSE)


def _emit(doc, out):
    out.write(json.dumps(doc, indent=2) + "\n")


def _need_poset(R, what: str) -> Poset:
    if not isinstance(R, Poset):
        raise SpecError(f"{what} needs a poset file, got a graph")
    return R


def cmd_check(args, out) -> int:
    P = _need_poset(read_structure(args.file), "check")
    w = two_plus_two(P)
    labels = P.labels()
    doc = {"interval_order": w is None, "witness": None if w is None else [labels[v] for v in w]}
    if args.json:
        _emit(doc, out)
    elif w is None:
        out.write("interval order: yes\n")
    else:
        a, b, c, d = doc["witness"]
        out.write(f"interval order: no\nwitness: {a} < {b}, {c} < {d} (2+2)\n")
    return EXIT_OK


def cmd_amchain(args, out) -> int:
    P = _need_poset(read_structure(args.file), "amchain")
    chain = am_chain(P)
    labels = P.labels()
    if args.json:
        _emit(chain.to_json(labels), out)
    else:
        out.write(f"{len(chain)} maximal antichains\n")
        for k, A in enumerate(chain.antichains):
            out.write(f"{k}: {{{', '.join(labels[v] for v in sorted(A))}}}\n")
    return EXIT_OK


def cmd_represent(args, out) -> int:
    P = _need_poset(read_structure(args.file), "represent")
    rep = standard_representation(P) if args.mode == "standard" else downset_interval_representation(P)
    if not rep.represents(P):
        raise ContractError("representation does not reproduce the order", str(rep.violations(P)[:3]))
    labels = P.labels()
    if args.json:
        _emit(rep.to_json(labels), out)
    else:
        out.write(f"chain of {rep.chain_length} positions\n")
        for v, (lo, hi) in enumerate(rep.intervals):
            out.write(f"{labels[v]}: [{lo}, {hi}]\n")
    return EXIT_OK


def cmd_decompose(args, out) -> int:
    R = read_structure(args.file)
    tree = module_tree(R)
    labels = R.labels()
    summary = None
    if isinstance(R, Poset) and R.n >= 2:
        try:
            summary = decompose_interval_order(R).summary(labels)
        except NotIntervalOrderError:
            summary = None
    if args.format == "json":
        doc = tree.to_json(labels)
        if summary is not None:
            doc["decomposition"] = summary
        _emit(doc, out)
    elif args.format == "dot":
        out.write(tree.to_dot(labels, Path(args.file).stem))
    else:
        for nd in tree.nodes():
            depth = _depth_of(tree.root, nd)
            out.write("  " * depth + f"{nd.kind.label()}: {' '.join(labels[v] for v in sorted(nd.vertices))}\n")
        if summary is not None:
            out.write(f"lexicographical sum over a{'n' if summary['index_kind'] == 'antichain' else ''} "
                      f"{summary['index_kind']} of {summary['index_size']} components\n")
    return EXIT_OK


def _depth_of(root, target, d=0):
    if root is target:
        return d
    for c in root.children:
        if target.vertices <= c.vertices:
            return _depth_of(c, target, d + 1)
    return d


def cmd_singulars(args, out) -> int:
    P = _need_poset(read_structure(args.file), "singulars")
    labels = P.labels()
    sing = [labels[v] for v in sorted(singular_vertices(P))]
    if args.json:
        _emit({"singular": sing}, out)
    else:
        out.write(" ".join(sing) + "\n")
    return EXIT_OK


def cmd_gen(args, out) -> int:
    if args.family == "in":
        if args.n < 1:
            raise SpecError("gen in needs N >= 1")
        P, name = semiorder(args.n), f"I{args.n}"
    elif args.family == "bq":
        if args.m < 1:
            raise SpecError("gen bq needs M >= 1")
        P, name = incidence_bipartite(args.m), f"B{args.m}"
    else:
        alpha = ord_parse(args.ordinal)
        P, name = p_alpha_prefix(canonical_term(alpha), args.size), f"P_{args.ordinal}"
    text = format_structure(P, name.replace(" ", ""))
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    R = read_structure(args.file)
    labels = R.labels()

    def enc(sets):
        return sorted(([labels[v] for v in sorted(s)] for s in sets), key=lambda s: (len(s), s))

    if args.what == "modules":
        doc = {
            "property": "modules",
            "sets": enc(s for s in oracle.all_modules(R) if s),
            "strong": enc(oracle.all_strong_modules(R)),
            "prime": oracle.is_prime_bruteforce(R),
        }
    else:
        if not isinstance(R, Poset):
            raise SpecError("oracle antichains needs a poset file")
        doc = {"property": "maximal_antichains", "sets": enc(oracle.all_maximal_antichains(R))}
    _emit(doc, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    R = read_structure(args.file)
    results = verify(R, seed=args.seed)
    ok = all(r.status != "fail" for r in results)
    if args.json:
        _emit({"ok": ok, "checks": [r.to_json() for r in results]}, out)
    else:
        for r in results:
            out.write(f"{r.status.upper():4}  {r.name}" + (f"  ({r.detail})" if r.detail else "") + "\n")
    return EXIT_OK if ok else EXIT_CONTRACT


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="iolab", description="Interval orders, modular decomposition and prime constructions.")
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for sampled checks")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_file(name, help_, fn, json_flag=True):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file")
        if json_flag:
            p.add_argument("--json", action="store_true")
        p.set_defaults(fn=fn)
        return p

    with_file("check", "interval-order verdict with a 2+2 witness", cmd_check)
    with_file("amchain", "chain of maximal antichains", cmd_amchain)
    p = with_file("represent", "interval representation", cmd_represent)
    p.add_argument("--mode", choices=["standard", "downset"], default="standard")
    p = with_file("decompose", "modular decomposition tree", cmd_decompose, json_flag=False)
    p.add_argument("--format", choices=["text", "dot", "json"], default="text")
    with_file("singulars", "singular vertices", cmd_singulars)
    p = sub.add_parser("oracle", help="brute-force cross-check output")
    p.add_argument("what", choices=["modules", "antichains"])
    p.add_argument("file")
    p.set_defaults(fn=cmd_oracle)
    with_file("verify", "run every applicable invariant", cmd_verify)

    g = sub.add_parser("gen", help="emit a generated poset file")
    gsub = g.add_subparsers(dest="family", required=True, parser_class=_Parser)
    gi = gsub.add_parser("in", help="semiorder I_N")
    gi.add_argument("n", type=int)
    gb = gsub.add_parser("bq", help="incidence bipartite poset B(C_M)")
    gb.add_argument("m", type=int)
    gp = gsub.add_parser("palpha", help="finite prefix of the rank-alpha family")
    gp.add_argument("--ordinal", required=True)
    gp.add_argument("--size", type=int, required=True)
    for q in (gi, gb, gp):
        q.add_argument("--out")
        q.set_defaults(fn=cmd_gen)
    return ap


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args, out)
    except (ParseError, CycleError, OSError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_PARSE
    except NotIntervalOrderError as e:
        sys.stderr.write(f"contract violated: interval order required; {e}\n")
        return EXIT_CONTRACT
    except (ContractError, SpecError, BudgetError, SizeGuardError) as e:
        sys.stderr.write(f"contract violated: {e}\n")
        return EXIT_CONTRACT
    except IolabError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_CONTRACT


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
