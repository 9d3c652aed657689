"""Exception types shared across iolab."""

from __future__ import annotations


class IolabError(Exception):
    pass


class CycleError(IolabError, ValueError):
    """Relation pairs contain a directed cycle; ``cycle`` lists the vertices in order."""

    def __init__(self, cycle, names=None):
        self.cycle = list(cycle)
        shown = [names[v] if names else str(v) for v in self.cycle]
        super().__init__("cycle in relation: " + " < ".join(shown + shown[:1]))


class SizeGuardError(IolabError):
    def __init__(self, n, guard, what="exhaustive routine"):
        self.n = n
        self.guard = guard
        super().__init__(f"{what} refused: n={n} exceeds guard {guard}")


class NotIntervalOrderError(IolabError):
    """Raised where an interval order is required; carries a 2+2 witness (a, b, c, d) with a<b, c<d."""

    def __init__(self, witness):
        self.witness = tuple(witness)
        a, b, c, d = self.witness
        super().__init__(f"not an interval order: {a}<{b} and {c}<{d} form 2+2")


class SpecError(IolabError, ValueError):
    pass


class ContractError(IolabError):
    """An invariant that theory guarantees was found violated."""

    def __init__(self, invariant, detail=""):
        self.invariant = invariant
        super().__init__(f"{invariant}: {detail}" if detail else invariant)


class BudgetError(IolabError, ValueError):
    pass


class NotLimitError(IolabError, ValueError):
    pass


class ParseError(IolabError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)
