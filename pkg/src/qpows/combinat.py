"""Compositions, set compositions, partitions and the coefficient formulas.

Conventions used throughout the package:

* a composition is a tuple of positive ints; ``()`` is the empty composition
* a set composition is a tuple of blocks, each block a sorted tuple of ints,
  the blocks covering ``1..n`` exactly once
* a set partition is a set composition in canonical order: sizes weakly
  decreasing and, among equal sizes, minima strictly decreasing
* positions (merge positions, descents) are 1-based: position ``i`` sits
  between part ``i`` and part ``i+1``
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable, Iterator, Sequence

from .orders import DESC, DTILDE, IntOrder, SetOrder

Composition = tuple
SetComposition = tuple
Partition = tuple
SetPartition = tuple


# ---------------------------------------------------------------- validation

def composition(parts: Iterable[int]) -> Composition:
    alpha = tuple(int(p) for p in parts)
    if any(p < 1 for p in alpha):
        raise ValueError(f"composition parts must be positive: {alpha}")
    return alpha


def set_composition(blocks: Iterable[Iterable[int]]) -> SetComposition:
    """Normalize and validate a set composition of ``[n]``."""
    phi = tuple(tuple(sorted(int(x) for x in b)) for b in blocks)
    seen: list[int] = []
    for b in phi:
        if not b:
            raise ValueError("set composition blocks must be nonempty")
        seen.extend(b)
    if len(set(seen)) != len(seen):
        raise ValueError(f"blocks are not disjoint: {format_set_composition(phi)}")
    if sorted(seen) != list(range(1, len(seen) + 1)):
        raise ValueError(f"blocks do not cover 1..n: {format_set_composition(phi)}")
    return phi


def format_set_composition(phi: SetComposition) -> str:
    return "|".join(",".join(map(str, b)) for b in phi)


def ground(phi: SetComposition) -> int:
    return sum(len(b) for b in phi)


# ------------------------------------------------------------- compositions

def to_subset(alpha: Sequence[int]) -> frozenset:
    """Partial sums ``{a1, a1+a2, ...}`` excluding the total."""
    return frozenset(itertools.accumulate(alpha[:-1]))


def from_subset(subset: Iterable[int], n: int) -> Composition:
    s = sorted(set(subset))
    if any(x < 1 or x > n - 1 for x in s):
        raise ValueError(f"subset {s} is not inside [1, {n - 1}]")
    if n == 0:
        return ()
    cuts = [0, *s, n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple:
    """All compositions of ``n`` ordered by length then lexicographically."""
    if n == 0:
        return ((),)
    out = [from_subset(s, n) for k in range(n) for s in itertools.combinations(range(1, n), k)]
    return tuple(sorted(out, key=lambda a: (len(a), a)))


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` as weakly decreasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first, *rest)


def sort_partition(alpha: Sequence[int]) -> Partition:
    return tuple(sorted(alpha, reverse=True))


def multiplicity(alpha: Sequence[int], i: int) -> int:
    return sum(1 for a in alpha if a == i)


def refines(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """True when ``alpha`` refines ``beta`` (beta is a coarsening of alpha)."""
    return sum(alpha) == sum(beta) and to_subset(beta) <= to_subset(alpha)


def refinements(alpha: Sequence[int]) -> Iterator[Composition]:
    """All compositions refining ``alpha``."""
    for pieces in itertools.product(*(compositions(a) for a in alpha)):
        yield tuple(itertools.chain.from_iterable(pieces))


def coarsenings(alpha: Sequence[int]) -> Iterator[Composition]:
    """All compositions coarser than (or equal to) ``alpha``."""
    n = sum(alpha)
    cuts = sorted(to_subset(alpha))
    for k in range(len(cuts) + 1):
        for keep in itertools.combinations(cuts, k):
            yield from_subset(keep, n)


def _blocks_of(alpha: Sequence[int], beta: Sequence[int]) -> list[tuple]:
    """Split ``alpha`` into consecutive runs summing to the parts of ``beta``."""
    if not refines(alpha, beta):
        raise ValueError(f"{tuple(alpha)} does not refine {tuple(beta)}")
    runs, i = [], 0
    for b in beta:
        run, total = [], 0
        while total < b:
            run.append(alpha[i])
            total += alpha[i]
            i += 1
        runs.append(tuple(run))
    return runs


def c_L(alpha: Sequence[int], beta: Sequence[int], L: int) -> tuple:
    """Per block of ``beta``, the number of parts of ``alpha`` equal to ``L``."""
    return tuple(multiplicity(run, L) for run in _blocks_of(alpha, beta))


def _fact_prod(counts: Iterable[int]) -> int:
    return prod(factorial(c) for c in counts)


def coarsening_coefficient(alpha: Sequence[int], beta: Sequence[int]) -> Fraction:
    """``C_{alpha,beta} = prod_i m_i(alpha)! / prod_i c_i(alpha,beta)!``."""
    runs = _blocks_of(alpha, beta)
    num = _fact_prod(Counter(alpha).values())
    den = prod(_fact_prod(Counter(run).values()) for run in runs)
    return Fraction(num, den)


def z_scalar(alpha: Sequence[int]) -> Fraction:
    return Fraction(prod(i ** m * factorial(m) for i, m in Counter(alpha).items()))


def sign_eps(alpha: Sequence[int]) -> int:
    """``(-1)^(|alpha| - len(alpha))``."""
    return -1 if (sum(alpha) - len(alpha)) % 2 else 1


def multinomial(counts: Iterable[int]) -> int:
    counts = list(counts)
    return factorial(sum(counts)) // _fact_prod(counts)


def reverse(seq: Sequence) -> tuple:
    return tuple(reversed(seq))


def mobius(beta: Sequence[int], gamma: Sequence[int]) -> int:
    """Mobius function of the refinement order (a boolean lattice)."""
    if not refines(beta, gamma):
        raise ValueError(f"{tuple(beta)} does not refine {tuple(gamma)}")
    return -1 if (len(beta) - len(gamma)) % 2 else 1


def merge_parts(alpha: Sequence[int], positions: Iterable[int]) -> Composition:
    """Sum the parts on both sides of each given 1-based position."""
    cut = to_subset(alpha) - {sum(alpha[:p]) for p in positions}
    return from_subset(cut, sum(alpha))


def merge_positions(alpha: Sequence[int], order: IntOrder = DESC) -> frozenset:
    """Positions ``i`` with ``not a_i < a_{i+1}`` under ``order``."""
    return frozenset(i for i in range(1, len(alpha)) if order.ge(alpha[i - 1], alpha[i]))


def C_max(alpha: Sequence[int], order: IntOrder = DESC) -> Composition:
    return merge_parts(alpha, merge_positions(alpha, order))


def T_min(alpha: Sequence[int], order: IntOrder = DESC) -> Composition:
    """Bottom of the P-to-F interval: strict ascents plus non strict descents."""
    n = sum(alpha)
    sums = list(itertools.accumulate(alpha))
    strict_desc = {sums[i - 1] for i in range(1, len(alpha)) if order.gt(alpha[i - 1], alpha[i])}
    return from_subset(to_subset(C_max(alpha, order)) | (set(range(1, n)) - strict_desc), n)


def order_interval(alpha: Sequence[int], order: IntOrder = DESC) -> list:
    """Pairs ``(beta, C_{alpha,beta})`` for beta between alpha and C_max(alpha)."""
    alpha = tuple(alpha)
    pos = sorted(merge_positions(alpha, order))
    out = []
    for k in range(len(pos) + 1):
        for sub in itertools.combinations(pos, k):
            beta = merge_parts(alpha, sub)
            out.append((beta, coarsening_coefficient(alpha, beta)))
    return out


def shuffle(alpha: Sequence, beta: Sequence) -> Counter:
    """Multiset of all interleavings of two sequences."""
    alpha, beta = tuple(alpha), tuple(beta)
    out: Counter = Counter()
    n = len(alpha) + len(beta)
    for slots in itertools.combinations(range(n), len(alpha)):
        ia, ib, word = iter(alpha), iter(beta), []
        chosen = set(slots)
        for k in range(n):
            word.append(next(ia) if k in chosen else next(ib))
        out[tuple(word)] += 1
    return out


def _quasi_shuffle(alpha: tuple, beta: tuple, merge) -> Counter:
    @lru_cache(maxsize=None)
    def rec(i: int, j: int) -> Counter:
        if i == len(alpha):
            return Counter({beta[j:]: 1})
        if j == len(beta):
            return Counter({alpha[i:]: 1})
        out: Counter = Counter()
        for w, c in rec(i + 1, j).items():
            out[(alpha[i], *w)] += c
        for w, c in rec(i, j + 1).items():
            out[(beta[j], *w)] += c
        for w, c in rec(i + 1, j + 1).items():
            out[(merge(alpha[i], beta[j]), *w)] += c
        return out

    return rec(0, 0)


def quasi_shuffle(alpha: Sequence[int], beta: Sequence[int]) -> Counter:
    """Shuffles plus the branch that adds the two leading parts."""
    return _quasi_shuffle(tuple(alpha), tuple(beta), lambda a, b: a + b)


def deconcatenations(seq: Sequence) -> list:
    seq = tuple(seq)
    return [(seq[:i], seq[i:]) for i in range(len(seq) + 1)]


# ---------------------------------------------------------- set compositions

@lru_cache(maxsize=None)
def set_compositions(n: int) -> tuple:
    """All set compositions of ``[n]``."""
    out = []
    for alpha in compositions(n):
        out.extend(_set_compositions_of_shape(alpha))
    return tuple(out)


def _set_compositions_of_shape(alpha: Sequence[int], pool: tuple | None = None) -> Iterator:
    if pool is None:
        pool = tuple(range(1, sum(alpha) + 1))
    if not alpha:
        yield ()
        return
    for first in itertools.combinations(pool, alpha[0]):
        rest = tuple(x for x in pool if x not in first)
        for tail in _set_compositions_of_shape(alpha[1:], rest):
            yield (first, *tail)


def rho(phi: SetComposition) -> Composition:
    return tuple(len(b) for b in phi)


def varrho(alpha: Sequence[int]) -> SetComposition:
    """Group positions by the rank of their value among the distinct values."""
    values = sorted(set(alpha))
    blocks = [[] for _ in values]
    rank = {v: k for k, v in enumerate(values)}
    for i, a in enumerate(alpha, start=1):
        blocks[rank[a]].append(i)
    return tuple(tuple(b) for b in blocks)


def shift_up(phi: SetComposition, n: int) -> SetComposition:
    if n < 0:
        raise ValueError("shift must be nonnegative")
    return tuple(tuple(x + n for x in b) for b in phi)


def standardize(blocks: Sequence[Sequence[int]]) -> SetComposition:
    """Relabel disjoint blocks onto ``1..m`` keeping the relative order."""
    elems = [x for b in blocks for x in b]
    if len(set(elems)) != len(elems):
        raise ValueError("cannot standardize overlapping blocks")
    rank = {x: k for k, x in enumerate(sorted(elems), start=1)}
    return tuple(tuple(sorted(rank[x] for x in b)) for b in blocks)


def shifted_shuffle(phi: SetComposition, psi: SetComposition) -> Counter:
    return shuffle(phi, shift_up(psi, ground(phi)))


def shifted_quasi_shuffle(phi: SetComposition, psi: SetComposition) -> Counter:
    return _quasi_shuffle(
        tuple(phi), shift_up(psi, ground(phi)), lambda a, b: tuple(sorted(a + b))
    )


def merge_blocks(phi: SetComposition, positions: Iterable[int]) -> SetComposition:
    """Unite blocks on both sides of each given 1-based position."""
    pos = set(positions)
    out: list[list[int]] = []
    for i, b in enumerate(phi):
        if i > 0 and i in pos:
            out[-1].extend(b)
        else:
            out.append(list(b))
    return tuple(tuple(sorted(b)) for b in out)


def set_order_descents(phi: SetComposition, order: SetOrder = DTILDE) -> frozenset:
    """Positions ``i`` with ``B_i > B_{i+1}`` under the set order."""
    n = ground(phi)
    return frozenset(i for i in range(1, len(phi)) if order.gt(phi[i - 1], phi[i], n))


def C_max_set(phi: SetComposition, order: SetOrder = DTILDE) -> SetComposition:
    return merge_blocks(phi, set_order_descents(phi, order))


def set_order_interval(phi: SetComposition, order: SetOrder = DTILDE) -> list:
    """All set compositions between ``phi`` and ``C_max_set(phi)``."""
    pos = sorted(set_order_descents(phi, order))
    return [
        merge_blocks(phi, sub)
        for k in range(len(pos) + 1)
        for sub in itertools.combinations(pos, k)
    ]


def _position_sums(phi: SetComposition, positions: Iterable[int]) -> set:
    sizes = list(itertools.accumulate(len(b) for b in phi))
    return {sizes[i - 1] for i in positions}


def rho_C(phi: SetComposition, order: SetOrder = DTILDE) -> Composition:
    n = ground(phi)
    desc = set_order_descents(phi, order)
    ascents = set(range(1, len(phi))) - desc
    return from_subset(_position_sums(phi, ascents), n)


def rho_T(phi: SetComposition, order: SetOrder = DTILDE) -> Composition:
    n = ground(phi)
    desc_sums = _position_sums(phi, set_order_descents(phi, order))
    return from_subset(to_subset(rho_C(phi, order)) | (set(range(1, n)) - desc_sums), n)


def block_orbit(phi: SetComposition) -> list:
    """Images of ``phi`` under permutations of equal-size blocks in place."""
    by_size: dict[int, list[int]] = {}
    for i, b in enumerate(phi):
        by_size.setdefault(len(b), []).append(i)
    classes = list(by_size.values())
    out = []
    for perms in itertools.product(*(itertools.permutations(c) for c in classes)):
        slots = list(phi)
        for cls, perm in zip(classes, perms):
            for dst, src in zip(cls, perm):
                slots[dst] = phi[src]
        out.append(tuple(slots))
    return out


def complement_blocks(phi: SetComposition) -> SetComposition:
    n = ground(phi)
    return tuple(tuple(sorted(n + 1 - x for x in b)) for b in phi)


# ------------------------------------------------------------ set partitions

def canonical_set_partition(blocks: Iterable[Iterable[int]]) -> SetPartition:
    phi = set_composition(blocks)
    return tuple(sorted(phi, key=lambda b: (-len(b), -b[0])))


def set_partitions(n: int) -> list:
    """All set partitions of ``[n]`` in canonical form."""
    if n == 0:
        return [()]
    out = []

    def rec(i: int, blocks: list[list[int]]):
        if i > n:
            out.append(canonical_set_partition(blocks))
            return
        for b in blocks:
            b.append(i)
            rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        rec(i + 1, blocks)
        blocks.pop()

    rec(1, [])
    return out


def _partitions_of_list(items: list) -> Iterator[list]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _partitions_of_list(rest):
        for k in range(len(part)):
            yield part[:k] + [[first, *part[k]]] + part[k + 1:]
        yield [[first], *part]


def set_partition_coarsenings(phi: SetPartition) -> list:
    """All set partitions obtained by uniting blocks of ``phi``."""
    out = set()
    for grouping in _partitions_of_list(list(phi)):
        out.add(canonical_set_partition(sum((list(b) for b in group), []) for group in grouping))
    return sorted(out, key=lambda p: (len(p), p))


def sort_set_composition(phi: SetComposition) -> SetPartition:
    """The set partition underlying a set composition."""
    return canonical_set_partition(phi)
