"""Filling families, stored as column vectors.

A filling places row ``i`` (a part of a composition or a block of a set
composition) in column ``columns[i]``. Each row holds exactly one entry, so a
filling is determined by its rows and its column vector.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from . import combinat as cb
from .orders import DESC, DTILDE, IntOrder, SetOrder


@dataclass(frozen=True)
class ColumnAssignment:
    rows: tuple
    columns: tuple

    def __post_init__(self):
        if len(self.rows) != len(self.columns):
            raise ValueError("one column index per row is required")
        used = set(self.columns)
        if used and used != set(range(1, max(used) + 1)):
            raise ValueError(f"columns must be contiguous from 1: {self.columns}")

    @property
    def width(self) -> int:
        return max(self.columns, default=0)

    def column_reading(self):
        return column_reading(self)


def column_reading(f: ColumnAssignment):
    """Column sums for integer rows, column unions for set rows."""
    k = f.width
    if f.rows and isinstance(f.rows[0], tuple):
        cols: list[list[int]] = [[] for _ in range(k)]
        for b, c in zip(f.rows, f.columns):
            cols[c - 1].extend(b)
        return tuple(tuple(sorted(c)) for c in cols)
    sums = [0] * k
    for a, c in zip(f.rows, f.columns):
        sums[c - 1] += a
    return tuple(sums)


def _diagonal(rows: Sequence, same_column_ok) -> Iterator[tuple]:
    """Column vectors with c_1 = 1 and c_i in {c_{i-1}, c_{i-1}+1}."""
    if not rows:
        yield ()
        return
    allowed = [same_column_ok(i) for i in range(1, len(rows))]
    for stays in itertools.product(*[(False, True) if ok else (False,) for ok in allowed]):
        cols = [1]
        for stay in stays:
            cols.append(cols[-1] if stay else cols[-1] + 1)
        yield tuple(cols)


def _distinct_orderings(blocks: list) -> Iterator[list]:
    """Orderings of blocks (lists) by weakly decreasing key, equal keys permuted."""
    groups = [list(g) for _, g in itertools.groupby(blocks, key=lambda b: b[0])]
    for perms in itertools.product(*(itertools.permutations(g) for g in groups)):
        yield [b for perm in perms for b in perm]


def enumerate_A(lam: Sequence[int]) -> list:
    """All fillings of a partition whose column sums weakly decrease."""
    lam = tuple(lam)
    out = []
    for sp in cb.set_partitions(len(lam)):
        blocks = [(sum(lam[i - 1] for i in b), b) for b in sp]
        blocks.sort(key=lambda t: -t[0])
        for order in _distinct_orderings(blocks):
            cols = [0] * len(lam)
            for c, (_, b) in enumerate(order, start=1):
                for i in b:
                    cols[i - 1] = c
            out.append(ColumnAssignment(lam, tuple(cols)))
    return out


def enumerate_SD(alpha: Sequence[int], order: IntOrder = DESC) -> list:
    alpha = tuple(alpha)
    same = lambda i: order.ge(alpha[i - 1], alpha[i])  # noqa: E731
    return [ColumnAssignment(alpha, cols) for cols in _diagonal(alpha, same)]


def _relabelings(values: tuple, cols: tuple) -> Iterator[tuple]:
    """Distinct ways to redistribute column labels among rows of equal value."""
    groups: dict[int, list[int]] = {}
    for i, v in enumerate(values):
        groups.setdefault(v, []).append(i)
    idx = list(groups.values())
    choices = [sorted(set(itertools.permutations([cols[i] for i in g]))) for g in idx]
    for pick in itertools.product(*choices):
        new = list(cols)
        for g, labels in zip(idx, pick):
            for i, c in zip(g, labels):
                new[i] = c
        yield tuple(new)


def enumerate_DD(alpha: Sequence[int], order: IntOrder = DESC) -> list:
    """Every SD filling together with its equal-row column permutations."""
    alpha = tuple(alpha)
    out = []
    for f in enumerate_SD(alpha, order):
        out.extend(ColumnAssignment(alpha, cols) for cols in _relabelings(alpha, f.columns))
    return out


def sf_count(row: Sequence[int], col: Sequence[int], order: IntOrder = DESC) -> Fraction:
    """Number of DD fillings with the given row and column readings."""
    row, col = tuple(row), tuple(col)
    if col not in {beta for beta, _ in cb.order_interval(row, order)}:
        raise ValueError(f"{col} is not in the interval above {row}")
    return cb.coarsening_coefficient(row, col)


def enumerate_LDD(phi: cb.SetComposition, order: SetOrder = DTILDE) -> list:
    phi = tuple(phi)
    n = cb.ground(phi)
    same = lambda i: order.gt(phi[i - 1], phi[i], n)  # noqa: E731
    return [ColumnAssignment(phi, cols) for cols in _diagonal(phi, same)]


def is_strict(phi: cb.SetComposition, order: SetOrder = DTILDE) -> bool:
    """Equal-size blocks appear in decreasing order."""
    n = cb.ground(phi)
    return all(
        order.gt(a, b, n)
        for a, b in itertools.combinations(phi, 2)
        if len(a) == len(b)
    )


def enumerate_SLD(phi: cb.SetComposition, order: SetOrder = DTILDE) -> list:
    """Diagonal fillings where a row may join the previous column when sizes allow."""
    phi = tuple(phi)
    if order.projection is None:
        raise ValueError(f"order {order.name} does not project to an integer order")
    if not is_strict(phi, order):
        raise ValueError(f"{cb.format_set_composition(phi)} is not strict")
    proj = order.projection
    same = lambda i: proj.ge(len(phi[i - 1]), len(phi[i]))  # noqa: E731
    return [ColumnAssignment(phi, cols) for cols in _diagonal(phi, same)]


def enumerate_LSR(phi: cb.SetPartition) -> list:
    """All single-row fillings: surjective column vectors over the blocks."""
    phi = cb.canonical_set_partition(phi)
    k = len(phi)
    out = []
    for sp in cb.set_partitions(k):
        for order in itertools.permutations(sp):
            cols = [0] * k
            for c, b in enumerate(order, start=1):
                for i in b:
                    cols[i - 1] = c
            out.append(ColumnAssignment(phi, tuple(cols)))
    return out
