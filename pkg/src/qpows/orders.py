"""Total orders on positive integers and on disjoint finite sets.

Every powersum basis in this package is parameterized by one of these orders.
Orders compare and hash by name, so two independently built orders with the
same name are interchangeable (this is what lets conversion caches key on
them).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Union

Block = tuple  # sorted tuple of distinct positive integers


@dataclass(frozen=True)
class IntOrder:
    """Strict total order ``<`` on positive integers, written a ≺ b."""

    name: str
    less: Callable[[int, int], bool] = field(compare=False, repr=False)

    def lt(self, a: int, b: int) -> bool:
        return self.less(a, b)

    def gt(self, a: int, b: int) -> bool:
        return self.less(b, a)

    def ge(self, a: int, b: int) -> bool:
        """Weak ``a ≽ b``; for a total order this is ``not a ≺ b``."""
        return not self.less(a, b)

    def sort_key(self, values: Sequence[int]) -> list[int]:
        """Return ``values`` sorted ≻-decreasingly (the "partition" shape)."""
        from functools import cmp_to_key

        def cmp(a, b):
            if self.less(a, b):
                return 1
            if self.less(b, a):
                return -1
            return 0

        return sorted(values, key=cmp_to_key(cmp))

    def reversed(self) -> "IntOrder":
        return int_order(_toggle_prefix(self.name, "reverse"))


@dataclass(frozen=True)
class SetOrder:
    """Strict total order ▷ on pairs of disjoint finite sets.

    ``greater(A, B, n)`` decides ``A ▷ B``; ``n`` is the ground size of the
    set composition the blocks live in (only complement orders use it).
    """

    name: str
    greater: Callable[[Block, Block, int], bool] = field(compare=False, repr=False)
    shift_invariant: bool = field(default=True, compare=False)
    standard_invariant: bool = field(default=True, compare=False)
    projection: Optional[IntOrder] = field(default=None, compare=False)

    def gt(self, a: Block, b: Block, n: int) -> bool:
        return self.greater(tuple(a), tuple(b), n)

    @property
    def projective(self) -> bool:
        return self.projection is not None

    def reversed(self) -> "SetOrder":
        return set_order(_toggle_prefix(self.name, "reverse"))

    def complement(self) -> "SetOrder":
        return set_order(_toggle_prefix(self.name, "bar"))


Order = Union[IntOrder, SetOrder]


def _toggle_prefix(name: str, prefix: str) -> str:
    head = prefix + ":"
    if name.startswith(head):
        return name[len(head):]
    return head + name


def _natural_less(a: int, b: int) -> bool:
    return a < b


def _evenodd_key(a: int) -> tuple[bool, int]:
    return (a % 2 == 0, a)


def _evenodd_less(a: int, b: int) -> bool:
    return _evenodd_key(a) < _evenodd_key(b)


_INT_BASE = {
    "desc": _natural_less,
    "evenodd": _evenodd_less,
}

INT_ORDER_NAMES = ("desc", "evenodd", "reverse:desc", "reverse:evenodd")


def int_order(name: str) -> IntOrder:
    """Build an integer order from its name (``desc``, ``evenodd``, ``reverse:<name>``)."""
    if name.startswith("reverse:"):
        inner = int_order(name[len("reverse:"):])
        if inner.name.startswith("reverse:"):
            return int_order(inner.name[len("reverse:"):])
        return IntOrder("reverse:" + inner.name, lambda a, b, f=inner.less: f(b, a))
    try:
        return IntOrder(name, _INT_BASE[name])
    except KeyError:
        raise ValueError(f"unknown integer order {name!r}") from None


DESC = int_order("desc")
NATURAL = DESC
EVENODD = int_order("evenodd")


def _upper_median(block: Block) -> int:
    # disjoint blocks never share this element, so equal-size ties cannot occur
    return block[len(block) // 2]


def _lift(proj: IntOrder) -> Callable[[Block, Block, int], bool]:
    def greater(a, b, n):
        if len(a) != len(b):
            return proj.gt(len(a), len(b))
        return a[0] < b[0]

    return greater


def _med(a, b, n):
    if len(a) != len(b):
        return len(a) > len(b)
    return _upper_median(a) > _upper_median(b)


def _min(a, b, n):
    return a[0] > b[0]


def _bar(block: Block, n: int) -> Block:
    return tuple(sorted(n + 1 - x for x in block))


SET_ORDER_NAMES = ("dtilde", "med", "min", "reverse:dtilde", "reverse:med", "reverse:min")


def set_order(name: str) -> SetOrder:
    """Build a set order from its name.

    Base orders: ``dtilde`` (larger size, then smaller minimum wins), ``med``
    (larger size, then larger upper median), ``min`` (larger minimum, not
    projective), ``lift:<intorder>`` (sizes by an integer order, then smaller
    minimum). Combinators: ``reverse:<name>`` and ``bar:<name>``.
    """
    if name.startswith("reverse:"):
        inner = set_order(name[len("reverse:"):])
        if inner.name.startswith("reverse:"):
            return set_order(inner.name[len("reverse:"):])
        f = inner.greater
        return SetOrder(
            "reverse:" + inner.name,
            lambda a, b, n: f(b, a, n),
            inner.shift_invariant,
            inner.standard_invariant,
            inner.projection.reversed() if inner.projection else None,
        )
    if name.startswith("bar:"):
        inner = set_order(name[len("bar:"):])
        if inner.name.startswith("bar:"):
            return set_order(inner.name[len("bar:"):])
        f = inner.greater
        # equal sizes compare through complements; different sizes are unchanged
        # for projective orders because complementing preserves sizes
        return SetOrder(
            "bar:" + inner.name,
            lambda a, b, n: f(_bar(a, n), _bar(b, n), n),
            False,
            False,
            inner.projection,
        )
    if name.startswith("lift:"):
        proj = int_order(name[len("lift:"):])
        if proj.name == "desc":
            return set_order("dtilde")
        return SetOrder("lift:" + proj.name, _lift(proj), True, True, proj)
    if name == "dtilde":
        return SetOrder("dtilde", _lift(DESC), True, True, DESC)
    if name == "med":
        return SetOrder("med", _med, True, True, DESC)
    if name == "min":
        return SetOrder("min", _min, True, True, None)
    raise ValueError(f"unknown set order {name!r}")


DTILDE = set_order("dtilde")
MED = set_order("med")
MIN_ORDER = set_order("min")


def lift(order: IntOrder) -> SetOrder:
    """The projective set order that compares sizes by ``order``."""
    return set_order("lift:" + order.name)


def resolve_order(name: str) -> Order:
    """Resolve a user-supplied order name to an integer or set order."""
    try:
        return int_order(name)
    except ValueError:
        pass
    try:
        return set_order(name)
    except ValueError:
        raise ValueError(f"unknown order {name!r}") from None
