"""Run every applicable invariant on one structure and report per property.

Oracle comparisons are skipped (status ``skip``) above the exhaustive guard.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import oracle
from .errors import IolabError, SizeGuardError
from .interval import (
    am_chain,
    discrimination_report,
    downset_interval_representation,
    is_interval_order,
    singular_vertices,
    singular_vertices_by_antichains,
    standard_representation,
)
from .modular import (
    decompose_interval_order,
    is_module,
    is_prime,
    kelly_check,
    module_tree,
    node_quotient_kind_ok,
    rank_inc_check,
    recompose,
    robust_hull,
)
from .poset import Poset, SimpleGraph, comparability_graph, exhaustive_guard, is_chain, width


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass", "fail" or "skip"
    detail: str = ""

    def to_json(self) -> dict:
        d = {"name": self.name, "status": self.status}
        if self.detail:
            d["detail"] = self.detail
        return d


def _run(name: str, fn: Callable[[], bool | tuple[bool, str]]) -> CheckResult:
    try:
        out = fn()
    except SizeGuardError as e:
        return CheckResult(name, "skip", str(e))
    except IolabError as e:
        return CheckResult(name, "fail", f"{type(e).__name__}: {e}")
    ok, detail = out if isinstance(out, tuple) else (out, "")
    return CheckResult(name, "pass" if ok else "fail", detail)


def _oracle_sized(R, fn):
    def wrapped():
        if R.n > exhaustive_guard():
            raise SizeGuardError(R.n, exhaustive_guard(), "oracle comparison")
        return fn()
    return wrapped


def _sampled_hulls(R, tree, rng: random.Random, samples: int) -> bool:
    nodes = tree.node_sets()
    for _ in range(samples):
        F = rng.sample(range(R.n), min(R.n, rng.randint(1, 3)))
        hull = robust_hull(R, F, tree)
        if not set(F) <= hull or hull not in nodes or not is_module(R, hull):
            return False
    return True


def verify(R: Poset | SimpleGraph, seed: int = 0, samples: int = 50) -> list[CheckResult]:
    rng = random.Random(seed)
    tree = module_tree(R)
    out = [
        _run("module tree quotients have a valid kind", lambda: all(node_quotient_kind_ok(nd) for nd in tree.nodes())),
        _run("hull of random vertex sets is a strong module", lambda: _sampled_hulls(R, tree, rng, samples)),
        _run("module tree equals oracle strong modules",
             _oracle_sized(R, lambda: tree.node_sets() == oracle.all_strong_modules(R))),
        _run("module calculus closed on oracle modules",
             _oracle_sized(R, lambda: not oracle.module_calculus_violations(R))),
        _run("primality agrees with oracle", _oracle_sized(R, lambda: is_prime(R, tree) == oracle.is_prime_bruteforce(R))),
    ]
    if isinstance(R, SimpleGraph):
        if R.n:
            out.append(_run("incomparability sets have smaller antichain height", lambda: rank_inc_check(R)))
        return out

    P = R
    out.append(_run("comparability graph has the same strong modules", lambda: module_tree(comparability_graph(P)).node_sets() == tree.node_sets()))
    out.append(_run("width agrees with oracle", _oracle_sized(P, lambda: width(P) == oracle.width_bruteforce(P))))
    io = is_interval_order(P)
    out.append(_run("interval order iff no 2+2", lambda: io == (oracle.find_2plus2(P) is None)))
    if not io:
        return out

    def am_vs_oracle():
        got = set(am_chain(P).antichains)
        return got == oracle.all_maximal_antichains(P)

    def reps():
        std, dn = standard_representation(P), downset_interval_representation(P)
        if not std.represents(P):
            return False, f"standard violations {std.violations(P)[:3]}"
        if not dn.represents(P):
            return False, f"down-set violations {dn.violations(P)[:3]}"
        return dn.is_injective(), "" if dn.is_injective() else "down-set representation not injective"

    def discriminating():
        rep = discrimination_report(standard_representation(P))
        failed = [k for k, v in rep.items() if not v]
        return not failed, ", ".join(failed)

    def round_trip():
        if P.n < 2:
            return True
        d = decompose_interval_order(P)
        return d.shape_ok() and recompose(d) == P

    prime = is_prime(P, tree)
    out += [
        _run("maximal antichains form a chain", lambda: len(am_chain(P)) >= 1),
        _run("maximal antichains agree with oracle", _oracle_sized(P, am_vs_oracle)),
        _run("interval representations respect the order", reps),
        _run("standard representation is discriminating", discriminating),
        _run("singular vertex definitions agree", lambda: singular_vertices(P) == singular_vertices_by_antichains(P)),
        _run("decomposition round-trip", round_trip),
        _run("kelly property", lambda: kelly_check(P)),
    ]
    if prime:
        out.append(_run("singular vertices form a chain", lambda: is_chain(P.induced(sorted(singular_vertices(P))))))
    return out

