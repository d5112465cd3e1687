from fractions import Fraction

import pytest

from qpows import combinat as cb
from qpows import nsym as ns
from qpows import qsym as q
from qpows.orders import DESC, EVENODD, NATURAL, int_order

ORDERS = [DESC, NATURAL, EVENODD, int_order("reverse:evenodd")]
half = Fraction(1, 2)


def test_s_to_z_examples():
    assert ns.s_to_z((1,)) == ns.Z((1,))
    assert ns.s_to_z((2,)) == ns.Z((2,)).scale(half) + ns.Z((1, 1)).scale(half)
    assert ns.s_to_z((2, 1)) == ns.Z((2, 1)).scale(half) + ns.Z((1, 1, 1)).scale(half)


def test_z_to_s_examples():
    assert ns.z_to_s(ns.Z((1,))) == ns.S((1,))
    assert ns.z_to_s(ns.Z((2,))) == 2 * ns.S((2,)) - ns.S((1, 1))
    assert ns.z_to_s(ns.s_to_z((2, 1, 2))) == ns.S((2, 1, 2))


def test_product_examples():
    assert ns.S((2,)) * ns.S((1,)) == ns.S((2, 1))
    assert ns.Z((1, 2)) * ns.Z((3,)) == ns.Z((1, 2, 3))
    assert (ns.S((1,)) + ns.S((2,))) * ns.S((1,)) == ns.S((1, 1)) + ns.S((2, 1))


@pytest.mark.parametrize("order", ORDERS, ids=lambda o: o.name)
def test_round_trips(order):
    zb = ns.Z_basis(order)
    for n in range(0, 7):
        for alpha in cb.compositions(n):
            assert ns.convert(ns.convert(ns.S(alpha), zb), ns.S_BASIS) == ns.S(alpha)
            z = ns.Z(alpha, order)
            assert ns.convert(ns.convert(z, ns.S_BASIS), zb) == z


def test_duality_check():
    assert ns.duality_check(2)
    for n in range(1, 8):
        assert ns.duality_check(n, NATURAL) and ns.duality_check(n, DESC)
    for n in range(1, 7):
        assert ns.duality_check(n, EVENODD)
    with pytest.raises(ValueError):
        ns.duality_check(0)


@pytest.mark.parametrize("order", ORDERS, ids=lambda o: o.name)
def test_z_dual_to_scaled_powersums(order):
    # <S_gamma, M_beta> = delta, so [S_gamma : Z_beta] must equal [Pt_beta : M_gamma]
    for n in range(1, 7):
        for gamma in cb.compositions(n):
            got = ns.s_to_z(gamma, order).terms
            for beta in cb.compositions(n):
                pt = q.convert(q.Pt(beta, order), q.M_BASIS)
                assert got.get(beta, 0) == pt.coefficient(gamma), (gamma, beta)


@pytest.mark.parametrize("order", ORDERS, ids=lambda o: o.name)
def test_s_to_z_is_multiplicative(order):
    # Z multiplies by concatenation, dual to the deconcatenation of Pt
    for n in range(1, 5):
        for a in cb.compositions(n):
            for b in cb.compositions(5 - n if n < 5 else 1):
                lhs = ns.s_to_z(a + b, order)
                rhs = ns.s_to_z(a, order) * ns.s_to_z(b, order)
                assert lhs == rhs, (a, b)


def test_mixed_bases_need_conversion():
    with pytest.raises(ValueError):
        ns.S((1,)) + q.M((1,))
