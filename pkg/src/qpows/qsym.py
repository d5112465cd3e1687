"""Quasisymmetric functions in the bases M, F, E, P and scaled P, plus Sym.

Every basis converts through the monomial basis M. The P bases carry the
integer order that defines their merge interval; the default is the natural
order.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from . import combinat as cb
from . import fillings, ribbon
from .algebra import Basis, SparseElement, Tensor
from .orders import DESC, IntOrder, SetOrder

M_BASIS = Basis("qsym", "M")
F_BASIS = Basis("qsym", "F")
E_BASIS = Basis("qsym", "E")
p_BASIS = Basis("sym", "p")
m_BASIS = Basis("sym", "m")


def P_basis(order: IntOrder = DESC) -> Basis:
    return Basis("qsym", "P", order)


def Pt_basis(order: IntOrder = DESC) -> Basis:
    return Basis("qsym", "Pt", order)


def qsym_basis(name: str, order: IntOrder = DESC) -> Basis:
    """Look up a QSym basis by name (``M F E P Pt``)."""
    if isinstance(order, SetOrder):
        if order.projection is None:
            raise ValueError(f"order {order.name} does not project to an integer order")
        order = order.projection
    fixed = {"M": M_BASIS, "F": F_BASIS, "E": E_BASIS}
    if name in fixed:
        return fixed[name]
    if name == "P":
        return P_basis(order)
    if name == "Pt":
        return Pt_basis(order)
    raise ValueError(f"unknown QSym basis {name!r}")


# ------------------------------------------------------------- expansions

def expand_P_in_M(alpha: Sequence[int], order: IntOrder = DESC) -> "QsymElement":
    return QsymElement(M_BASIS, cb.order_interval(tuple(alpha), order))


def expand_P_in_F(alpha: Sequence[int], order: IntOrder = DESC) -> "QsymElement":
    """Signed standard descent ribbon counts over ``[T_min, C_max]``."""
    alpha = tuple(alpha)
    top = cb.C_max(alpha, order)
    terms = {}
    for beta in cb.coarsenings(cb.T_min(alpha, order)):
        if cb.refines(beta, top):
            rt = ribbon.descent_ribbons(beta, alpha)
            count = prod(ribbon.standard_filling_count(r) for r in rt.ribbons.values())
            terms[beta] = (-1) ** rt.height * count
    return QsymElement(F_BASIS, terms)


def _to_M(index: tuple, basis: Basis) -> dict:
    name = basis.name
    if name == "M":
        return {index: 1}
    if name == "F":
        return {b: 1 for b in cb.refinements(index)}
    if name == "E":
        return {b: 1 for b in cb.coarsenings(index)}
    if name == "P":
        return dict(cb.order_interval(index, basis.order))
    if name == "Pt":
        z = cb.z_scalar(index)
        return {b: c / z for b, c in cb.order_interval(index, basis.order)}
    raise ValueError(f"unknown QSym basis {name!r}")


@lru_cache(maxsize=None)
def _M_in_P(alpha: tuple, order: IntOrder) -> tuple:
    """Back substitution in the triangular P-in-M matrix."""
    diag = Fraction(prod(factorial(m) for m in Counter(alpha).values()))
    out: dict = {alpha: 1 / diag}
    for beta, c in cb.order_interval(alpha, order):
        if beta == alpha:
            continue
        for gamma, d in _M_in_P(beta, order):
            out[gamma] = out.get(gamma, 0) - c * d / diag
    return tuple((k, v) for k, v in out.items() if v)


def _from_M(index: tuple, basis: Basis) -> dict:
    name = basis.name
    if name == "M":
        return {index: 1}
    if name == "F":
        return {b: cb.mobius(b, index) for b in cb.refinements(index)}
    if name == "E":
        return {b: cb.mobius(index, b) for b in cb.coarsenings(index)}
    if name == "P":
        return dict(_M_in_P(index, basis.order))
    if name == "Pt":
        return {b: c * cb.z_scalar(b) for b, c in _M_in_P(index, basis.order)}
    raise ValueError(f"unknown QSym basis {name!r}")


def convert(x: "QsymElement", target: Basis) -> "QsymElement":
    if x.basis == target:
        return x
    if target.space != "qsym":
        raise ValueError(f"cannot convert QSym element to {target.space}")
    m = x if x.basis == M_BASIS else x.map_linear(lambda k: _to_M(k, x.basis), M_BASIS)
    if target == M_BASIS:
        return m
    return m.map_linear(lambda k: _from_M(k, target), target)


# ----------------------------------------------------------- Hopf structure

def _p_shuffle_coefficient(alpha: tuple, beta: tuple) -> Fraction:
    ma, mb = Counter(alpha), Counter(beta)
    num = prod(factorial(ma[i]) * factorial(mb[i]) for i in set(ma) | set(mb))
    den = prod(factorial(ma[i] + mb[i]) for i in set(ma) | set(mb))
    return Fraction(num, den)


def _product_indices(a: tuple, b: tuple, basis: Basis) -> dict:
    name = basis.name
    if name == "M":
        return cb.quasi_shuffle(a, b)
    if name == "Pt":
        return cb.shuffle(a, b)
    if name == "P":
        c = _p_shuffle_coefficient(a, b)
        return {g: c * k for g, k in cb.shuffle(a, b).items()}
    raise ValueError(f"no direct product in basis {name}")


def _word_with_descents(alpha: tuple, shift: int = 0) -> list:
    """A permutation of ``shift+1..shift+n`` whose descent composition is ``alpha``."""
    word, top = [], shift + sum(alpha)
    for a in alpha:
        word.extend(range(top - a + 1, top + 1))
        top -= a
    return word


def _descent_composition(word: Sequence[int]) -> tuple:
    cuts = [i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1]]
    return cb.from_subset(set(cuts), len(word))


def _F_product(a: tuple, b: tuple) -> dict:
    """Shuffle one permutation per descent class; descents of the shuffles give F."""
    u, v = _word_with_descents(a), _word_with_descents(b, sum(a))
    n = len(u) + len(v)
    out: dict = {}
    for pos in itertools.combinations(range(n), len(u)):
        w, iu, iv, chosen = [], iter(u), iter(v), set(pos)
        for i in range(n):
            w.append(next(iu) if i in chosen else next(iv))
        g = _descent_composition(w)
        out[g] = out.get(g, 0) + 1
    return out


def product(x: "QsymElement", y: "QsymElement") -> "QsymElement":
    """Product in the basis of ``x``; ``y`` is converted first if needed."""
    y = convert(y, x.basis)
    basis = x.basis
    if basis.name == "F":
        out: dict = {}
        for a, ca in x.terms.items():
            for b, cb_ in y.terms.items():
                for g, k in _F_product(a, b).items():
                    out[g] = out.get(g, 0) + ca * cb_ * k
        return QsymElement(basis, out)
    if basis.name == "E":
        return convert(product(convert(x, M_BASIS), convert(y, M_BASIS)), basis)
    out: dict = {}
    for a, ca in x.terms.items():
        for b, cb_ in y.terms.items():
            for g, k in _product_indices(a, b, basis).items():
                out[g] = out.get(g, 0) + ca * cb_ * k
    return QsymElement(basis, out)


def _p_split_coefficient(gamma: tuple, left: tuple, right: tuple) -> Fraction:
    mg, ml, mr = Counter(gamma), Counter(left), Counter(right)
    num = prod(factorial(v) for v in mg.values())
    den = prod(factorial(v) for v in ml.values()) * prod(factorial(v) for v in mr.values())
    return Fraction(num, den)


def coproduct(x: "QsymElement") -> Tensor:
    basis = x.basis
    if basis.name in ("F", "E"):
        t = coproduct(convert(x, M_BASIS))
        return t.map_legs(lambda k: _from_M(k, basis), lambda k: _from_M(k, basis), basis, basis)
    out: dict = {}
    for g, c in x.terms.items():
        for left, right in cb.deconcatenations(g):
            k = _p_split_coefficient(g, left, right) if basis.name == "P" else 1
            out[(left, right)] = out.get((left, right), 0) + c * k
    return Tensor(basis, basis, out)


def counit(x: "QsymElement") -> Fraction:
    return x.coefficient(())


def antipode(x: "QsymElement") -> "QsymElement":
    """``S(Pt_a) = (-1)^len(a) Pt_rev(a)``; other bases go through Pt."""
    basis = x.basis
    if basis.name in ("P", "Pt"):
        return x.map_linear(lambda a: {cb.reverse(a): (-1) ** len(a)})
    order = basis.order or DESC
    y = convert(x, Pt_basis(order))
    return convert(antipode(y), basis)


def transpose(alpha: Sequence[int]) -> tuple:
    """Composition with subset ``[n-1]`` minus ``{n - s : s in set(alpha)}``."""
    n = sum(alpha)
    flipped = {n - s for s in cb.to_subset(tuple(alpha))}
    return cb.from_subset(set(range(1, n)) - flipped, n)


def star(x: "QsymElement") -> "QsymElement":
    basis = x.basis
    if basis.name in ("P", "Pt"):
        target = Basis("qsym", basis.name, basis.order.reversed())
        return x.map_linear(lambda a: {cb.reverse(a): 1}, target)
    return x.map_linear(lambda a: {cb.reverse(a): 1})


def omega(x: "QsymElement") -> "QsymElement":
    basis = x.basis
    if basis.name in ("P", "Pt"):
        return x.map_linear(lambda a: {cb.reverse(a): cb.sign_eps(a)})
    if basis.name == "F":
        return x.map_linear(lambda a: {transpose(a): 1})
    return convert(omega(convert(x, F_BASIS)), basis)


def psi(x: "QsymElement") -> "QsymElement":
    basis = x.basis
    if basis.name in ("P", "Pt"):
        target = Basis("qsym", basis.name, basis.order.reversed())
        return x.map_linear(lambda a: {a: cb.sign_eps(a)}, target)
    return star(omega(x))


def involution(x: "QsymElement", kind: str) -> "QsymElement":
    try:
        return {"star": star, "omega": omega, "psi": psi}[kind](x)
    except KeyError:
        raise ValueError(f"unknown involution {kind!r}") from None


def tensor_product(t: Tensor, u: Tensor) -> Tensor:
    """Componentwise product ``(a⊗b)(c⊗d) = ac⊗bd``."""
    out: dict = {}
    for (a, b), c1 in t.terms.items():
        for (c, d), c2 in u.terms.items():
            left = product(QsymElement(t.left, {a: 1}), QsymElement(u.left, {c: 1}))
            right = product(QsymElement(t.right, {b: 1}), QsymElement(u.right, {d: 1}))
            for k1, v1 in left.terms.items():
                for k2, v2 in right.terms.items():
                    out[(k1, k2)] = out.get((k1, k2), 0) + c1 * c2 * v1 * v2
    return Tensor(t.left, t.right, out)


class QsymElement(SparseElement):
    __slots__ = ()

    def product(self, other):
        return product(self, other)

    def convert(self, target: Basis):
        return convert(self, target)

    def coproduct(self) -> Tensor:
        return coproduct(self)

    def antipode(self):
        return antipode(self)


def M(alpha: Sequence[int] = ()) -> QsymElement:
    return QsymElement(M_BASIS, {cb.composition(alpha): 1})


def F(alpha: Sequence[int] = ()) -> QsymElement:
    return QsymElement(F_BASIS, {cb.composition(alpha): 1})


def E(alpha: Sequence[int] = ()) -> QsymElement:
    return QsymElement(E_BASIS, {cb.composition(alpha): 1})


def P(alpha: Sequence[int] = (), order: IntOrder = DESC) -> QsymElement:
    return QsymElement(P_basis(order), {cb.composition(alpha): 1})


def Pt(alpha: Sequence[int] = (), order: IntOrder = DESC) -> QsymElement:
    return QsymElement(Pt_basis(order), {cb.composition(alpha): 1})


# --------------------------------------------------------------------- Sym

def _distinct_rearrangements(lam: tuple) -> list:
    from itertools import permutations

    return sorted(set(permutations(lam)))


def sym_p_to_m(lam: Sequence[int]) -> "SymElement":
    """``p_lam`` as the column sums of all fillings of ``lam``."""
    lam = cb.sort_partition(lam)
    out: Counter = Counter(fillings.column_reading(f) for f in fillings.enumerate_A(lam))
    return SymElement(m_BASIS, out)


def sym_m_to_M(lam: Sequence[int]) -> QsymElement:
    lam = cb.sort_partition(lam)
    return QsymElement(M_BASIS, {a: 1 for a in _distinct_rearrangements(lam)})


def sym_p_to_P(lam: Sequence[int], order: IntOrder = DESC) -> QsymElement:
    lam = cb.sort_partition(lam)
    return QsymElement(P_basis(order), {a: 1 for a in _distinct_rearrangements(lam)})


@lru_cache(maxsize=None)
def _m_in_p(lam: tuple) -> tuple:
    row = sym_p_to_m(lam).terms
    diag = row[lam]
    out: dict = {lam: 1 / diag}
    for mu, c in row.items():
        if mu == lam:
            continue
        for nu, d in _m_in_p(mu):
            out[nu] = out.get(nu, 0) - c * d / diag
    return tuple((k, v) for k, v in out.items() if v)


def sym_convert(x: "SymElement", target: Basis) -> "SymElement":
    if x.basis == target:
        return x
    if target == m_BASIS:
        return x.map_linear(lambda lam: sym_p_to_m(lam).terms, m_BASIS)
    if target == p_BASIS:
        return x.map_linear(lambda lam: dict(_m_in_p(lam)), p_BASIS)
    raise ValueError(f"cannot convert Sym element to {target}")


def sym_to_qsym(x: "SymElement") -> QsymElement:
    m = sym_convert(x, m_BASIS)
    return QsymElement(M_BASIS, [(a, c) for lam, c in m.terms.items() for a in sym_m_to_M(lam).terms])


class SymElement(SparseElement):
    __slots__ = ()

    def product(self, other):
        basis = self.basis
        x, y = sym_convert(self, p_BASIS), sym_convert(other, p_BASIS)
        out: dict = {}
        for a, ca in x.terms.items():
            for b, cb_ in y.terms.items():
                key = cb.sort_partition(a + b)
                out[key] = out.get(key, 0) + ca * cb_
        return sym_convert(SymElement(p_BASIS, out), basis)

    def convert(self, target: Basis):
        if target.space == "qsym":
            return convert(sym_to_qsym(self), target)
        return sym_convert(self, target)


def sym_p(lam: Sequence[int]) -> SymElement:
    return SymElement(p_BASIS, {cb.sort_partition(cb.composition(lam)): 1})


def sym_m(lam: Sequence[int]) -> SymElement:
    return SymElement(m_BASIS, {cb.sort_partition(cb.composition(lam)): 1})
