"""Noncommutative symmetric functions: complete basis S and Zassenhaus bases Z."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Sequence

from . import combinat as cb
from .algebra import Basis, SparseElement
from .orders import DESC, IntOrder

S_BASIS = Basis("nsym", "S")


def Z_basis(order: IntOrder = DESC) -> Basis:
    return Basis("nsym", "Z", order)


def _z_weight(beta: tuple, alpha: tuple) -> Fraction:
    """``prod_i 1 / (i^{m_i(beta)} c_i(beta, alpha)!)``."""
    # C_{beta,alpha} / C_{beta,beta} leaves exactly 1 / prod c_i(beta, alpha)!
    c = cb.coarsening_coefficient(beta, alpha) / cb.coarsening_coefficient(beta, beta)
    return c / prod(beta)


@lru_cache(maxsize=None)
def _S_in_Z(alpha: tuple, order: IntOrder) -> tuple:
    cuts = cb.to_subset(alpha)
    out = []
    for beta in cb.refinements(alpha):
        if cb.to_subset(cb.C_max(beta, order)) <= cuts:
            out.append((beta, _z_weight(beta, alpha)))
    return tuple(out)


def s_to_z(alpha: Sequence[int], order: IntOrder = DESC) -> "NsymElement":
    """Expand ``S_alpha`` over refinements whose runs inside each part weakly decrease."""
    return NsymElement(Z_basis(order), _S_in_Z(tuple(alpha), order))


@lru_cache(maxsize=None)
def _Z_in_S(alpha: tuple, order: IntOrder) -> tuple:
    row = dict(_S_in_Z(alpha, order))
    diag = row[alpha]
    out: dict = {alpha: 1 / diag}
    for beta, c in row.items():
        if beta == alpha:
            continue
        for gamma, d in _Z_in_S(beta, order):
            out[gamma] = out.get(gamma, 0) - c * d / diag
    return tuple((k, v) for k, v in out.items() if v)


def z_to_s(x: "NsymElement") -> "NsymElement":
    if x.basis == S_BASIS:
        return x
    return x.map_linear(lambda a: dict(_Z_in_S(a, x.basis.order)), S_BASIS)


def convert(x: "NsymElement", target: Basis) -> "NsymElement":
    if x.basis == target:
        return x
    if target.space != "nsym":
        raise ValueError(f"cannot convert NSym element to {target.space}")
    s = z_to_s(x)
    if target == S_BASIS:
        return s
    return s.map_linear(lambda a: dict(_S_in_Z(a, target.order)), target)


def product(x: "NsymElement", y: "NsymElement") -> "NsymElement":
    """Both bases are multiplicative: indices concatenate."""
    y = convert(y, x.basis)
    out: dict = {}
    for a, ca in x.terms.items():
        for b, cb_ in y.terms.items():
            out[a + b] = out.get(a + b, 0) + ca * cb_
    return NsymElement(x.basis, out)


def duality_matrices(n: int, order: IntOrder = DESC) -> tuple:
    """``A[beta][gamma]`` = coefficient of M_gamma in scaled P_beta;
    ``B[gamma][beta]`` = coefficient of Z_beta in S_gamma."""
    comps = cb.compositions(n)
    A = {b: {g: Fraction(0) for g in comps} for b in comps}
    B = {g: {b: Fraction(0) for b in comps} for g in comps}
    for beta in comps:
        z = cb.z_scalar(beta)
        for gamma, c in cb.order_interval(beta, order):
            A[beta][gamma] = c / z
    for gamma in comps:
        for beta, c in _S_in_Z(gamma, order):
            B[gamma][beta] = c
    return A, B


def duality_check(n: int, order: IntOrder = DESC) -> bool:
    if n < 1:
        raise ValueError("degree must be positive")
    A, B = duality_matrices(n, order)
    return all(A[b][g] == B[g][b] for b in A for g in A[b])


class NsymElement(SparseElement):
    __slots__ = ()

    def product(self, other):
        return product(self, other)

    def convert(self, target: Basis):
        return convert(self, target)


def S(alpha: Sequence[int] = ()) -> NsymElement:
    return NsymElement(S_BASIS, {cb.composition(alpha): 1})


def Z(alpha: Sequence[int] = (), order: IntOrder = DESC) -> NsymElement:
    return NsymElement(Z_basis(order), {cb.composition(alpha): 1})
