"""Quasisymmetric functions in noncommuting variables (NCQSym) and NCSym.

Indices are set compositions. The P bases carry a set order; products and
coproducts use the shifted shuffle and standardized deconcatenation directly
when the order is shift- or standard-invariant and go through M otherwise.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Sequence

from . import combinat as cb
from . import fillings
from .algebra import Basis, SparseElement, Tensor
from .orders import DTILDE, IntOrder, SetOrder, lift
from .qsym import F_BASIS, M_BASIS as QSYM_M, QsymElement, expand_P_in_M as qsym_expand_P_in_M

M_BASIS = Basis("ncqsym", "M")
ncm_BASIS = Basis("ncsym", "m")
ncp_BASIS = Basis("ncsym", "p")


def P_basis(order: SetOrder = DTILDE) -> Basis:
    return Basis("ncqsym", "P", order)


def ncq_basis(name: str, order=DTILDE) -> Basis:
    if isinstance(order, IntOrder):
        order = lift(order)
    if name == "M":
        return M_BASIS
    if name == "P":
        return P_basis(order)
    raise ValueError(f"unknown NCQSym basis {name!r}")


def _require_projective(order: SetOrder):
    if order.projection is None:
        raise ValueError(f"order {order.name} does not project under rho")


# -------------------------------------------------------------- conversions

def expand_P_in_M(phi: cb.SetComposition, order: SetOrder = DTILDE) -> "NcqElement":
    return NcqElement(M_BASIS, {psi: 1 for psi in cb.set_order_interval(tuple(phi), order)})


@lru_cache(maxsize=None)
def _M_in_P(phi: tuple, order: SetOrder) -> tuple:
    out: dict = {phi: 1}
    for psi in cb.set_order_interval(phi, order):
        if psi == phi:
            continue
        for chi, d in _M_in_P(psi, order):
            out[chi] = out.get(chi, 0) - d
    return tuple((k, v) for k, v in out.items() if v)


def m_to_p(x: "NcqElement", order: SetOrder = DTILDE) -> "NcqElement":
    """Invert the unitriangular P-in-M expansion."""
    if x.basis != M_BASIS:
        raise ValueError("m_to_p expects an element in the M basis")
    return x.map_linear(lambda phi: dict(_M_in_P(phi, order)), P_basis(order))


def convert(x: "NcqElement", target: Basis) -> "NcqElement":
    if x.basis == target:
        return x
    if target.space != "ncqsym":
        raise ValueError(f"cannot convert NCQSym element to {target.space}")
    if x.basis == M_BASIS:
        m = x
    else:
        m = x.map_linear(lambda phi: expand_P_in_M(phi, x.basis.order).terms, M_BASIS)
    return m if target == M_BASIS else m_to_p(m, target.order)


# ----------------------------------------------------------- Hopf structure

def product(x: "NcqElement", y: "NcqElement") -> "NcqElement":
    y = convert(y, x.basis)
    basis = x.basis
    if basis.name == "M":
        op = cb.shifted_quasi_shuffle
    elif basis.order.shift_invariant:
        op = cb.shifted_shuffle
    else:
        return convert(product(convert(x, M_BASIS), convert(y, M_BASIS)), basis)
    out: dict = {}
    for a, ca in x.terms.items():
        for b, cb_ in y.terms.items():
            for g, k in op(a, b).items():
                out[g] = out.get(g, 0) + ca * cb_ * k
    return NcqElement(basis, out)


def _standard_splits(phi: tuple) -> list:
    return [(cb.standardize(left), cb.standardize(right)) for left, right in cb.deconcatenations(phi)]


def coproduct(x: "NcqElement") -> Tensor:
    basis = x.basis
    if basis.name == "P" and not basis.order.standard_invariant:
        t = coproduct(convert(x, M_BASIS))
        back = lambda phi: dict(_M_in_P(phi, basis.order))  # noqa: E731
        return t.map_legs(back, back, basis, basis)
    out: dict = {}
    for phi, c in x.terms.items():
        for key in _standard_splits(phi):
            out[key] = out.get(key, 0) + c
    return Tensor(basis, basis, out)


def tensor_product(t: Tensor, u: Tensor) -> Tensor:
    out: dict = {}
    for (a, b), c1 in t.terms.items():
        for (c, d), c2 in u.terms.items():
            left = product(NcqElement(t.left, {a: 1}), NcqElement(u.left, {c: 1}))
            right = product(NcqElement(t.right, {b: 1}), NcqElement(u.right, {d: 1}))
            for k1, v1 in left.terms.items():
                for k2, v2 in right.terms.items():
                    out[(k1, k2)] = out.get((k1, k2), 0) + c1 * c2 * v1 * v2
    return Tensor(t.left, t.right, out)


# ------------------------------------------------------------------- NCSym

def _orderings(phi: cb.SetPartition) -> list:
    return [tuple(p) for p in itertools.permutations(phi)]


def ncsym_m_to_M(phi: cb.SetPartition) -> "NcqElement":
    phi = cb.canonical_set_partition(phi)
    return NcqElement(M_BASIS, {p: 1 for p in _orderings(phi)})


def ncsym_p_to_m(phi: cb.SetPartition) -> "NcsymElement":
    """``p_phi`` is the sum of ``m_psi`` over coarsenings ``psi`` of ``phi``."""
    phi = cb.canonical_set_partition(phi)
    return NcsymElement(ncm_BASIS, {psi: 1 for psi in cb.set_partition_coarsenings(phi)})


def ncsym_p_expand(phi: cb.SetPartition) -> "NcqElement":
    """``p_phi`` in M through the coarsening lattice."""
    out: dict = {}
    for psi, c in ncsym_p_to_m(phi).terms.items():
        for key in ncsym_m_to_M(psi).terms:
            out[key] = out.get(key, 0) + c
    return NcqElement(M_BASIS, out)


def ncsym_p_expand_lsr(phi: cb.SetPartition) -> "NcqElement":
    """``p_phi`` in M as the column readings of single-row fillings."""
    out: dict = {}
    for f in fillings.enumerate_LSR(phi):
        key = fillings.column_reading(f)
        out[key] = out.get(key, 0) + 1
    return NcqElement(M_BASIS, out)


def ncsym_p_to_P(phi: cb.SetPartition, order: SetOrder = DTILDE) -> "NcqElement":
    phi = cb.canonical_set_partition(phi)
    return NcqElement(P_basis(order), {p: 1 for p in _orderings(phi)})


@lru_cache(maxsize=None)
def _ncm_in_ncp(phi: tuple) -> tuple:
    out: dict = {phi: 1}
    for psi in cb.set_partition_coarsenings(phi):
        if psi == phi:
            continue
        for chi, d in _ncm_in_ncp(psi):
            out[chi] = out.get(chi, 0) - d
    return tuple((k, v) for k, v in out.items() if v)


def ncsym_convert(x: "NcsymElement", target: Basis) -> SparseElement:
    if x.basis == target:
        return x
    if target.space == "ncqsym":
        m = ncsym_convert(x, ncm_BASIS)
        out: dict = {}
        for phi, c in m.terms.items():
            for key in ncsym_m_to_M(phi).terms:
                out[key] = out.get(key, 0) + c
        return convert(NcqElement(M_BASIS, out), target)
    if target == ncm_BASIS:
        return x.map_linear(lambda phi: ncsym_p_to_m(phi).terms, ncm_BASIS)
    if target == ncp_BASIS:
        return x.map_linear(lambda phi: dict(_ncm_in_ncp(phi)), ncp_BASIS)
    raise ValueError(f"cannot convert NCSym element to {target}")


class NcsymElement(SparseElement):
    __slots__ = ()

    def product(self, other):
        x, y = ncsym_convert(self, ncp_BASIS), ncsym_convert(other, ncp_BASIS)
        out: dict = {}
        for a, ca in x.terms.items():
            n = cb.ground(a)
            for b, cb_ in y.terms.items():
                key = cb.canonical_set_partition(a + cb.shift_up(b, n))
                out[key] = out.get(key, 0) + ca * cb_
        return ncsym_convert(NcsymElement(ncp_BASIS, out), self.basis)

    def convert(self, target: Basis):
        return ncsym_convert(self, target)


# -------------------------------------------------------------- projections

def project_rho(x: "NcqElement") -> QsymElement:
    """``M_Phi -> M_rho(Phi)``; P elements are expanded in M first."""
    m = convert(x, M_BASIS)
    out: dict = {}
    for phi, c in m.terms.items():
        key = cb.rho(phi)
        out[key] = out.get(key, 0) + c
    return QsymElement(QSYM_M, out)


def project_P_to_F(phi: cb.SetComposition, order: SetOrder = DTILDE) -> QsymElement:
    _require_projective(order)
    phi = tuple(phi)
    top, bottom = cb.rho_C(phi, order), cb.rho_T(phi, order)
    return QsymElement(
        F_BASIS,
        {beta: cb.mobius(beta, top) for beta in cb.coarsenings(bottom) if cb.refines(beta, top)},
    )


def orbit_project_sum(phi: cb.SetComposition, order: SetOrder = DTILDE) -> QsymElement:
    """Sum of rho(P_{sigma Phi}) over place permutations of equal-size blocks."""
    _require_projective(order)
    total = QsymElement(QSYM_M, {})
    for psi in cb.block_orbit(tuple(phi)):
        total = total + project_rho(expand_P_in_M(psi, order))
    return total


def orbit_project_expected(phi: cb.SetComposition, order: SetOrder = DTILDE) -> QsymElement:
    _require_projective(order)
    return qsym_expand_P_in_M(cb.rho(tuple(phi)), order.projection)


def orbit_count(row: cb.SetComposition, col: cb.SetComposition, order: SetOrder = DTILDE):
    row, col = tuple(row), tuple(col)
    readings = {fillings.column_reading(f) for f in fillings.enumerate_SLD(row, order)}
    if col not in readings:
        raise ValueError("column reading does not come from a strict labelled filling of the row")
    return cb.coarsening_coefficient(cb.rho(row), cb.rho(col))


# ------------------------------------------------------------- complements

def algebraic_complement(x: "NcqElement") -> "NcqElement":
    basis = x.basis
    target = basis if basis.name == "M" else P_basis(basis.order.reversed())
    return x.map_linear(lambda phi: {cb.reverse(phi): 1}, target)


def coalgebraic_complement(x: "NcqElement") -> "NcqElement":
    basis = x.basis
    target = basis if basis.name == "M" else P_basis(basis.order.complement())
    return x.map_linear(lambda phi: {cb.complement_blocks(phi): 1}, target)


# -------------------------------------------------------------------- FQSym

def fqsym_G(tau: Sequence[int]) -> "NcqElement":
    """Image of G_tau: P over the singleton blocks in the order of ``tau``."""
    tau = tuple(tau)
    if sorted(tau) != list(range(1, len(tau) + 1)):
        raise ValueError(f"{tau} is not a permutation")
    return NcqElement(P_basis(DTILDE), {tuple((t,) for t in tau): 1})


class NcqElement(SparseElement):
    __slots__ = ()

    def product(self, other):
        return product(self, other)

    def convert(self, target: Basis):
        return convert(self, target)

    def coproduct(self) -> Tensor:
        return coproduct(self)


def Mn(phi) -> NcqElement:
    return NcqElement(M_BASIS, {cb.set_composition(phi): 1})


def Pn(phi, order: SetOrder = DTILDE) -> NcqElement:
    return NcqElement(P_basis(order), {cb.set_composition(phi): 1})


def ncm(phi) -> NcsymElement:
    return NcsymElement(ncm_BASIS, {cb.canonical_set_partition(phi): 1})


def ncp(phi) -> NcsymElement:
    return NcsymElement(ncp_BASIS, {cb.canonical_set_partition(phi): 1})
