"""Ordinals below epsilon_0 in Cantor normal form, and well-founded chain terms.

Text grammar (``w`` is omega)::

    expr     := term ('+' term)*
    term     := 'w' ('^' exponent)? ('*' nat)? | nat
    exponent := nat | 'w' ('^' exponent)? | '(' expr ')'

Sums are normalised with ordinal addition, so ``1+w`` reads as ``w``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Callable, Union

from .errors import NotLimitError, ParseError


@functools.total_ordering
@dataclass(frozen=True)
class Ordinal:
    """``terms`` is a tuple of (exponent, coefficient) with strictly decreasing exponents."""

    terms: tuple[tuple["Ordinal", int], ...] = ()

    def __post_init__(self):
        for (e, c), nxt in zip(self.terms, self.terms[1:] + ((None, None),)):
            if not isinstance(c, int) or c < 1:
                raise ValueError(f"coefficient must be a positive int, got {c!r}")
            if nxt[0] is not None and not e > nxt[0]:
                raise ValueError("exponents must be strictly decreasing")

    @classmethod
    def of(cls, k: int) -> "Ordinal":
        if k < 0:
            raise ValueError("ordinals are nonnegative")
        return cls(((ZERO, k),)) if k else ZERO

    @classmethod
    def power(cls, exponent: "Ordinal", coefficient: int = 1) -> "Ordinal":
        return cls(((exponent, coefficient),))

    def __lt__(self, other):
        if not isinstance(other, Ordinal):
            return NotImplemented
        return ord_compare(self, other) < 0

    def __add__(self, other: "Ordinal") -> "Ordinal":
        if not other.terms:
            return self
        lead = other.terms[0][0]
        kept = [t for t in self.terms if t[0] > lead]
        same = [t for t in self.terms if t[0] == lead]
        rest = list(other.terms)
        if same:
            rest[0] = (lead, same[0][1] + rest[0][1])
        return Ordinal(tuple(kept + rest))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return all(e.is_zero for e, _ in self.terms)

    @property
    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][0].is_zero

    @property
    def is_limit(self) -> bool:
        return bool(self.terms) and not self.terms[-1][0].is_zero

    def predecessor(self) -> "Ordinal":
        if not self.is_successor:
            raise ValueError(f"{ord_show(self)} has no predecessor")
        *head, (e, c) = self.terms
        return Ordinal(tuple(head) + (((e, c - 1),) if c > 1 else ()))

    def successor(self) -> "Ordinal":
        return self + ONE

    def __int__(self):
        if not self.is_finite:
            raise ValueError(f"{ord_show(self)} is infinite")
        return self.terms[0][1] if self.terms else 0

    def __repr__(self):
        return f"Ordinal({ord_show(self)!r})"

    def __str__(self):
        return ord_show(self)


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def ord_compare(a: Ordinal, b: Ordinal) -> int:
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = ord_compare(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    return (len(a.terms) > len(b.terms)) - (len(a.terms) < len(b.terms))


# ---------------------------------------------------------------- text form


def ord_show(o: Ordinal) -> str:
    if o.is_zero:
        return "0"
    parts = []
    for e, c in o.terms:
        if e.is_zero:
            parts.append(str(c))
            continue
        s = "w" if e == ONE else "w^" + _show_exponent(e)
        parts.append(s if c == 1 else f"{s}*{c}")
    return "+".join(parts)


def _show_exponent(e: Ordinal) -> str:
    if e.is_finite or e == OMEGA:
        return ord_show(e)
    if len(e.terms) == 1 and e.terms[0][1] == 1 and not e.terms[0][0].is_zero:
        # single power w^x: keep right-associated
        return "w^" + _show_exponent(e.terms[0][0]) if e.terms[0][0] != ONE else "w"
    return f"({ord_show(e)})"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ParseError(f"{msg} in {self.text!r}", column=self.pos + 1)

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def nat(self) -> int:
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a natural number")
        return int(self.text[start:self.pos])

    def expr(self) -> Ordinal:
        total = self.term()
        while self.peek() == "+":
            self.pos += 1
            total = total + self.term()
        return total

    def term(self) -> Ordinal:
        ch = self.peek()
        if ch.isdigit():
            return Ordinal.of(self.nat())
        if ch != "w":
            self.error("expected 'w' or a natural number")
        self.pos += 1
        exponent = ONE
        if self.peek() == "^":
            self.pos += 1
            exponent = self.exponent()
        coef = 1
        if self.peek() == "*":
            self.pos += 1
            coef = self.nat()
        return Ordinal.power(exponent, coef) if coef else ZERO

    def exponent(self) -> Ordinal:
        ch = self.peek()
        if ch.isdigit():
            return Ordinal.of(self.nat())
        if ch == "(":
            self.pos += 1
            e = self.expr()
            self.take(")")
            return e
        if ch == "w":
            self.pos += 1
            if self.peek() == "^":
                self.pos += 1
                return Ordinal.power(self.exponent())
            return OMEGA
        self.error("expected an exponent")


def ord_parse(text: str) -> Ordinal:
    p = _Parser(text)
    o = p.expr()
    if p.peek():
        p.error("unexpected trailing input")
    return o


# ---------------------------------------------------------------- fundamental sequences


def fundamental_sequence(lam: Ordinal, i: int) -> Ordinal:
    """The i-th element of the standard sequence converging to the limit ``lam``."""
    if not lam.is_limit:
        raise NotLimitError(f"{ord_show(lam)} is not a limit ordinal")
    *head, (e, c) = lam.terms
    base = Ordinal(tuple(head) + (((e, c - 1),) if c > 1 else ()))
    if e.is_successor:
        step = Ordinal.power(e.predecessor(), i + 1)
    else:
        step = Ordinal.power(fundamental_sequence(e, i))
    return base + step


# ---------------------------------------------------------------- chain terms


@dataclass(frozen=True)
class FiniteChain:
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("FiniteChain needs k >= 1")


@dataclass(frozen=True)
class Omega:
    pass


@dataclass(frozen=True)
class FiniteSum:
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if len(self.parts) < 2:
            raise ValueError("FiniteSum needs at least two parts")


@dataclass(frozen=True)
class FundamentalRule:
    """Summand rule ``i -> canonical_term(limit[i])``."""

    limit: Ordinal

    def __call__(self, i: int) -> "ChainTerm":
        return canonical_term(fundamental_sequence(self.limit, i))


@dataclass(frozen=True)
class OmegaSum:
    """An omega-indexed sum: ``body`` is a fixed term or a rule ``i -> term``."""

    body: Union["ChainTerm", Callable[[int], "ChainTerm"]]

    def summand(self, i: int) -> "ChainTerm":
        return self.body(i) if callable(self.body) else self.body


ChainTerm = Union[FiniteChain, Omega, FiniteSum, OmegaSum]


def rank(term: ChainTerm) -> Ordinal:
    """Hausdorff-style rank under the conventions used here.

    Finite chains and omega have rank 0.  A finite sum of finite chains is
    finite (rank 0); any other finite sum has rank ``max + 1``.  An
    omega-sum of a fixed body has rank ``rank(body) + 1``; an omega-sum
    driven by a fundamental rule has rank ``sup_i (rank(body_i) + 1)``, which
    is the rule's limit.
    """
    if isinstance(term, (FiniteChain, Omega)):
        return ZERO
    if isinstance(term, FiniteSum):
        if all(isinstance(p, FiniteChain) for p in term.parts):
            return ZERO
        return max(rank(p) for p in term.parts).successor()
    if isinstance(term, OmegaSum):
        if isinstance(term.body, FundamentalRule):
            return term.body.limit
        if callable(term.body):
            raise ValueError("rank of an omega-sum needs a fixed body or a FundamentalRule")
        return rank(term.body).successor()
    raise TypeError(f"not a chain term: {term!r}")


def canonical_term(alpha: Ordinal) -> ChainTerm:
    """A chain term of rank ``alpha`` built only from omega leaves."""
    if alpha.is_zero:
        return Omega()
    if alpha.is_successor:
        return OmegaSum(canonical_term(alpha.predecessor()))
    return OmegaSum(FundamentalRule(alpha))


def show_term(term: ChainTerm) -> str:
    if isinstance(term, FiniteChain):
        return str(term.k)
    if isinstance(term, Omega):
        return "w"
    if isinstance(term, FiniteSum):
        return "(" + " + ".join(show_term(p) for p in term.parts) + ")"
    if isinstance(term.body, FundamentalRule):
        return f"sum_i T[{ord_show(term.body.limit)}[i]]"
    if callable(term.body):
        return "sum_i rule(i)"
    return f"sum_w {show_term(term.body)}"
