"""Plain-text poset and graph files.

Poset files::

    # comment
    poset NAME
    elements: a b c d
    a < b
    c < d

Graph files use ``graph NAME`` and ``a -- b`` lines.  Relation lines may be
given in any order; posets are transitively closed on read.
"""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .errors import ParseError
from .poset import Poset, SimpleGraph, poset_from_pairs

_TOKEN = re.compile(r"\S+")


def _strip_comment(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def parse_structure(text: str) -> Poset | SimpleGraph:
    kind = None
    names: list[str] | None = None
    index: dict[str, int] = {}
    rel: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        body = line.strip()
        if kind is None:
            m = re.fullmatch(r"(poset|graph)(?:\s+(\S+))?", body)
            if not m:
                raise ParseError("expected header 'poset NAME' or 'graph NAME'", lineno, col)
            kind = m.group(1)
            continue
        if body.startswith("elements:"):
            if names is not None:
                raise ParseError("duplicate elements line", lineno, col)
            names = body[len("elements:"):].split()
            for k, s in enumerate(names):
                if s in index:
                    raise ParseError(f"duplicate element {s!r}", lineno, col)
                index[s] = k
            continue
        if names is None:
            raise ParseError("relation before 'elements:' line", lineno, col)
        op = "<" if kind == "poset" else "--"
        toks = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]
        if len(toks) != 3 or toks[1][0] != op:
            raise ParseError(f"expected 'a {op} b'", lineno, col)
        (a, ca), _, (b, cb) = toks
        for s, c in ((a, ca), (b, cb)):
            if s not in index:
                raise ParseError(f"unknown element {s!r}", lineno, c)
        if a == b:
            raise ParseError(f"element {a!r} related to itself", lineno, ca)
        rel.append((index[a], index[b]))
    if kind is None:
        raise ParseError("empty input: missing header")
    if names is None:
        raise ParseError("missing 'elements:' line")
    if kind == "poset":
        return poset_from_pairs(len(names), rel, names)
    return SimpleGraph.from_edges(len(names), rel, names)


def read_structure(path) -> Poset | SimpleGraph:
    return parse_structure(Path(path).read_text())


def format_structure(R: Poset | SimpleGraph, name: str = "P") -> str:
    """Serialize; posets are written as their cover relation to keep files short."""
    labels = R.labels()
    if isinstance(R, Poset):
        lines = [f"poset {name}", "elements: " + " ".join(labels)]
        lt = R.lt
        # i < j is a cover iff nothing lies strictly between
        between = (lt.astype(np.uint8) @ lt.astype(np.uint8)) > 0
        covers = lt & ~between
        for i, j in zip(*np.nonzero(covers)):
            lines.append(f"{labels[i]} < {labels[j]}")
    else:
        lines = [f"graph {name}", "elements: " + " ".join(labels)]
        for i, j in R.edges():
            lines.append(f"{labels[i]} -- {labels[j]}")
    return "\n".join(lines) + "\n"


def write_structure(R: Poset | SimpleGraph, path, name: str = "P") -> None:
    Path(path).write_text(format_structure(R, name))
