"""Ground truth by exhaustive search over operation tables.

``is_cayley_bruteforce`` looks for an associative table on {0..n-1} with
some row ``a`` equal to alpha (so ``a*x == alpha(x)``).  Cells are filled
in row-major order and every associativity triple whose four products are
already known is re-checked after each assignment.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CarrierTooLarge
from .transformation import Transformation

__all__ = [
    "OperationTable",
    "is_associative",
    "is_cayley_bruteforce",
    "all_cayley_functions",
    "MAX_SEARCH_SIZE",
    "MAX_ENUMERATION_SIZE",
]

MAX_SEARCH_SIZE = 4
MAX_ENUMERATION_SIZE = 3


@dataclass(frozen=True)
class OperationTable:
    size: int
    table: tuple[tuple[int, ...], ...]
    element: int | None = None  # the row equal to the searched-for alpha

    def __call__(self, a: int, x: int) -> int:
        return self.table[a][x]

    def row(self, a: int) -> Transformation:
        return Transformation(self.table[a])

    def is_associative(self) -> bool:
        return is_associative(self.table)

    def to_record(self) -> dict:
        return {"size": self.size, "table": [list(r) for r in self.table],
                "element": self.element}

    def format(self, labels=None) -> str:
        lab = labels or [str(i) for i in range(self.size)]
        return "\n".join(" ".join(lab[v] for v in r) for r in self.table)


def is_associative(table) -> bool:
    n = len(table)
    r = range(n)
    return all(table[table[a][b]][c] == table[a][table[b][c]]
               for a in r for b in r for c in r)


def _consistent(t: list[int], n: int) -> bool:
    # t is flat, -1 marks an unassigned cell
    for x in range(n):
        xn = x * n
        for y in range(n):
            xy = t[xn + y]
            if xy < 0:
                continue
            xyn = xy * n
            yn = y * n
            for z in range(n):
                yz = t[yn + z]
                if yz < 0:
                    continue
                left = t[xyn + z]
                if left < 0:
                    continue
                right = t[xn + yz]
                if right >= 0 and left != right:
                    return False
    return True


def _search_row_fixed(alpha: Transformation, a: int) -> list[int] | None:
    n = alpha.size
    t = [-1] * (n * n)
    t[a * n:(a + 1) * n] = alpha.map
    if not _consistent(t, n):
        return None
    free = [i for i in range(n * n) if t[i] < 0]

    def fill(k: int) -> bool:
        if k == len(free):
            return True
        cell = free[k]
        for v in range(n):
            t[cell] = v
            if _consistent(t, n) and fill(k + 1):
                return True
        t[cell] = -1
        return False

    return t if fill(0) else None


def is_cayley_bruteforce(alpha: Transformation) -> OperationTable | None:
    """Witness semigroup in which alpha is the left translation by some
    element, or None if no such semigroup exists."""
    n = alpha.size
    if n > MAX_SEARCH_SIZE:
        raise CarrierTooLarge(
            f"brute-force search is capped at n <= {MAX_SEARCH_SIZE}, got {n}")
    for a in range(n):
        t = _search_row_fixed(alpha, a)
        if t is not None:
            table = tuple(tuple(t[i * n:(i + 1) * n]) for i in range(n))
            return OperationTable(n, table, a)
    return None


def associative_tables(n: int):
    """Every associative operation table on n points (plain enumeration)."""
    if n > MAX_ENUMERATION_SIZE:
        raise CarrierTooLarge(
            f"table enumeration is capped at n <= {MAX_ENUMERATION_SIZE}, got {n}")
    for flat in itertools.product(range(n), repeat=n * n):
        table = tuple(flat[i * n:(i + 1) * n] for i in range(n))
        if is_associative(table):
            yield table


def all_cayley_functions(n: int) -> set[Transformation]:
    out = set()
    for table in associative_tables(n):
        out.update(Transformation(row) for row in table)
    return out
