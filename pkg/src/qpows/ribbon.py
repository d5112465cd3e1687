"""Ribbons, descent ribbons and standard descent ribbon counts."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import prod
from typing import Sequence

from . import combinat as cb


@dataclass(frozen=True)
class Ribbon:
    """Rows top to bottom as ``(start_column, length)``."""

    rows: tuple = ()

    def __post_init__(self):
        for (s0, l0), (s1, l1) in zip(self.rows, self.rows[1:]):
            end = s0 + l0 - 1
            if l1 < 1 or s1 not in (end, end + 1):
                raise ValueError(f"rows {self.rows} do not form a ribbon")

    @property
    def size(self) -> int:
        return sum(length for _, length in self.rows)

    def spans(self) -> tuple:
        """Rows as ``(first_column, last_column)``."""
        return tuple((s, s + length - 1) for s, length in self.rows)

    def cells(self) -> list:
        """Cells as ``(row, column)`` with rows counted from the top."""
        return [(r, c) for r, (s, length) in enumerate(self.rows) for c in range(s, s + length)]

    def add_east(self) -> "Ribbon":
        if not self.rows:
            return Ribbon(((1, 1),))
        s, length = self.rows[-1]
        return Ribbon(self.rows[:-1] + ((s, length + 1),))

    def add_south(self) -> "Ribbon":
        """New row whose first box sits directly below the last box."""
        if not self.rows:
            return Ribbon(((1, 1),))
        s, length = self.rows[-1]
        return Ribbon(self.rows + ((s + length - 1, 1),))

    def add_southeast(self) -> "Ribbon":
        if not self.rows:
            return Ribbon(((1, 1),))
        s, length = self.rows[-1]
        return Ribbon(self.rows + ((s + length, 1),))


@dataclass(frozen=True)
class RibbonTuple:
    ribbons: dict = field(default_factory=dict)  # part size -> Ribbon
    height: int = 0

    def ribbon(self, k: int) -> Ribbon:
        return self.ribbons.get(k, Ribbon())

    @property
    def size(self) -> int:
        return sum(r.size for r in self.ribbons.values())


def ribbon_of(alpha: Sequence[int]) -> Ribbon:
    """Row ``i+1`` starts in the last column of row ``i``."""
    if not alpha:
        raise ValueError("ribbon_of needs a nonempty composition")
    rows, start = [], 1
    for a in alpha:
        rows.append((start, a))
        start += a - 1
    return Ribbon(tuple(rows))


def descent_ribbons(beta: Sequence[int], alpha: Sequence[int]) -> RibbonTuple:
    """Distribute one box per part of ``alpha`` into a ribbon per part size.

    The parts of ``alpha`` consume the boxes of the ribbon of ``beta`` in
    reading order. A part whose size differs from the previous part starts a
    new corner-connected row (no constraint). For equal adjacent sizes the box
    goes directly below when the boxes consumed so far end a row of ``beta``
    and east otherwise, so the fillings count the admissible orderings.
    """
    beta, alpha = tuple(beta), tuple(alpha)
    if sum(beta) != sum(alpha):
        raise ValueError(f"degrees differ: {beta} and {alpha}")
    row_ends = cb.to_subset(beta)
    ribbons: dict[int, Ribbon] = {}
    consumed = height = 0
    for i, a in enumerate(alpha):
        current = ribbons.get(a, Ribbon())
        if i == 0 or alpha[i - 1] != a:
            ribbons[a] = current.add_southeast()
        elif consumed in row_ends:
            ribbons[a] = current.add_south()
        else:
            ribbons[a] = current.add_east()
        # rows of beta touched by these boxes, minus one
        height += sum(1 for s in row_ends if consumed < s < consumed + a)
        consumed += a
    return RibbonTuple(ribbons, height)


def height(beta: Sequence[int], alpha: Sequence[int]) -> int:
    return descent_ribbons(beta, alpha).height


def _precedence(cells: list) -> list:
    """For each cell, the bitmask of cells that must hold smaller labels."""
    index = {cell: k for k, cell in enumerate(cells)}
    before = [0] * len(cells)
    for k, (r, c) in enumerate(cells):
        left = index.get((r, c - 1))
        if left is not None:
            before[k] |= 1 << left
        below = index.get((r + 1, c))
        if below is not None:
            before[k] |= 1 << below
    return before


@lru_cache(maxsize=None)
def _count_rows(rows: tuple) -> int:
    cells = Ribbon(rows).cells()
    before = _precedence(cells)
    full = (1 << len(cells)) - 1
    ways = [0] * (full + 1)
    ways[0] = 1
    for mask in range(full + 1):
        if not ways[mask]:
            continue
        for k in range(len(cells)):
            bit = 1 << k
            if not mask & bit and before[k] & mask == before[k]:
                ways[mask | bit] += ways[mask]
    return ways[full]


def standard_filling_count(r: Ribbon) -> int:
    """Labelings by ``1..size`` increasing along rows and down-decreasing in columns."""
    return _count_rows(r.rows)


def sdr_count(beta: Sequence[int], alpha: Sequence[int]) -> int:
    rt = descent_ribbons(beta, alpha)
    return prod(standard_filling_count(r) for r in rt.ribbons.values())
