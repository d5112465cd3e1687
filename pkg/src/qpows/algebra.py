"""Sparse linear combinations tagged with a basis, and tensors of them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional

from .orders import Order

Scalar = (int, Fraction)


@dataclass(frozen=True)
class Basis:
    """A basis of one of the spaces ``qsym``, ``nsym``, ``ncqsym``, ``sym``, ``ncsym``."""

    space: str
    name: str
    order: Optional[Order] = None

    def __str__(self) -> str:
        return self.name


def _clean(terms: Iterable) -> dict:
    out: dict = {}
    for key, c in terms:
        if c:
            out[key] = out.get(key, 0) + c
    return {k: Fraction(v) for k, v in out.items() if v}


class SparseElement:
    """Finite map from indices to exact rationals in a fixed basis."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: Basis, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        self.basis = basis
        self.terms = _clean(items)

    # -- construction helpers
    @classmethod
    def monomial(cls, basis: Basis, index, coeff=1):
        return cls(basis, {index: Fraction(coeff)})

    @classmethod
    def zero(cls, basis: Basis):
        return cls(basis, {})

    def _new(self, terms) -> "SparseElement":
        return type(self)(self.basis, terms)

    # -- inspection
    @property
    def space(self) -> str:
        return self.basis.space

    def coefficient(self, index) -> Fraction:
        return self.terms.get(index, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return self.terms.items()

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def support(self) -> set:
        return set(self.terms)

    # -- vector space structure
    def _check(self, other: "SparseElement"):
        if not isinstance(other, SparseElement) or other.basis != self.basis:
            raise ValueError(
                f"cannot combine {self.space}:{self.basis} with "
                f"{getattr(other, 'space', type(other).__name__)}:{getattr(other, 'basis', '')}"
            )

    def __add__(self, other):
        if isinstance(other, SparseElement) and other.space == self.space and other.basis != self.basis:
            other = other.convert(self.basis)
        self._check(other)
        return self._new(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self._new({k: -v for k, v in self.terms.items()})

    def scale(self, c) -> "SparseElement":
        c = Fraction(c)
        return self._new({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        if isinstance(other, SparseElement):
            return self.product(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, SparseElement):
            return self.basis == other.basis and self.terms == other.terms
        if isinstance(other, Scalar) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        from .cli import format_text

        return format_text(self)

    # -- hooks filled in by the space modules
    def product(self, other: "SparseElement") -> "SparseElement":
        raise NotImplementedError(f"no product on {self.space}")

    def convert(self, target: Basis) -> "SparseElement":
        raise NotImplementedError(f"no conversions on {self.space}")

    def map_linear(self, f: Callable, basis: Basis | None = None) -> "SparseElement":
        """Extend ``f(index) -> {index: coeff}`` linearly."""
        out: dict = {}
        for k, c in self.terms.items():
            for k2, c2 in f(k).items():
                out[k2] = out.get(k2, 0) + c * c2
        return type(self)(basis or self.basis, out)


class Tensor:
    """Finite map from pairs of indices to rationals, one basis per leg."""

    __slots__ = ("left", "right", "terms")

    def __init__(self, left: Basis, right: Basis, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        self.left = left
        self.right = right
        self.terms = _clean(items)

    @property
    def space(self) -> str:
        return self.left.space

    def __add__(self, other: "Tensor") -> "Tensor":
        if (self.left, self.right) != (other.left, other.right):
            raise ValueError("tensor legs use different bases")
        return Tensor(self.left, self.right, list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + other.scale(-1)

    def scale(self, c) -> "Tensor":
        c = Fraction(c)
        return Tensor(self.left, self.right, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return (self.left, self.right, self.terms) == (other.left, other.right, other.terms)

    def __hash__(self):
        return hash((self.left, self.right, frozenset(self.terms.items())))

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, left, right) -> Fraction:
        return self.terms.get((left, right), Fraction(0))

    def map_legs(self, f_left: Callable, f_right: Callable, left: Basis, right: Basis) -> "Tensor":
        """Apply linear maps ``index -> {index: coeff}`` to each leg."""
        out: dict = {}
        for (a, b), c in self.terms.items():
            fa, fb = f_left(a), f_right(b)
            for a2, ca in fa.items():
                for b2, cb in fb.items():
                    out[(a2, b2)] = out.get((a2, b2), 0) + c * ca * cb
        return Tensor(left, right, out)

    def __repr__(self) -> str:
        from .cli import format_text

        return format_text(self)
