import itertools
from collections import Counter
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from qpows import combinat as cb
from qpows.orders import DESC, DTILDE, EVENODD, MED

compositions_st = st.lists(st.integers(1, 4), min_size=0, max_size=5).map(tuple)


def sc(text):
    return cb.set_composition(tuple(int(ch) for ch in b) for b in text.split("|"))


def test_subset_bijection_examples():
    assert cb.to_subset((1, 2, 1, 1)) == {1, 3, 4}
    assert cb.to_subset((5,)) == set()
    assert cb.from_subset({2}, 5) == (2, 3)
    with pytest.raises(ValueError):
        cb.from_subset({5}, 5)


def test_subset_bijection_round_trip():
    for n in range(11):
        for alpha in cb.compositions(n):
            assert cb.from_subset(cb.to_subset(alpha), n) == alpha
        assert len(cb.compositions(n)) == (2 ** (n - 1) if n else 1)


def test_multiplicity():
    assert cb.multiplicity((2, 1, 2), 2) == 2
    assert cb.multiplicity((2, 1, 2), 3) == 0
    assert cb.multiplicity((1, 2, 1, 1), 1) == 3


def test_c_L_keeps_zero_blocks():
    a, b = (3, 2, 1, 1, 3, 1, 1, 1, 2, 1), (6, 1, 3, 1, 2, 3)
    assert cb.c_L(a, b, 1) == (1, 1, 0, 1, 2, 1)
    assert cb.c_L(a, b, 2) == (1, 0, 0, 0, 0, 1)
    assert cb.c_L((2, 1, 2), (2, 1, 2), 2) == (1, 0, 1)
    with pytest.raises(ValueError):
        cb.c_L((2, 1), (1, 2), 1)


def test_coarsening_coefficient():
    assert cb.coarsening_coefficient((1, 2, 1, 1), (1, 2, 2)) == 3
    assert cb.coarsening_coefficient((1, 2, 1, 1), (1, 2, 1, 1)) == 6
    assert cb.coarsening_coefficient((2, 1, 2), (3, 2)) == 2
    with pytest.raises(ValueError):
        cb.coarsening_coefficient((3,), (1, 2))


def test_z_scalar():
    assert cb.z_scalar((2, 1, 2)) == 8
    assert cb.z_scalar((1,)) == 1
    assert cb.z_scalar((1, 1, 1)) == 6
    for alpha in cb.compositions(6):
        z = cb.z_scalar(alpha)
        assert z == cb.z_scalar(sorted(alpha)) == cb.z_scalar(cb.reverse(alpha))


def test_cmax_tmin_examples():
    assert cb.C_max((3, 2, 1, 1, 3, 1, 1, 1, 2, 1)) == (7, 6, 3)
    assert cb.C_max((1, 2, 1, 1)) == (1, 4)
    assert cb.T_min((1, 2, 1, 1)) == (1, 1, 2, 1)
    assert cb.C_max((4,)) == (4,)
    # M_4 has every composition of 4 in its F-support, so the interval bottom is (1,1,1,1)
    assert cb.T_min((4,)) == (1, 1, 1, 1)


def test_order_interval_examples():
    assert cb.order_interval((2, 1, 2)) == [((2, 1, 2), 2), ((3, 2), 2)]
    eo = dict(cb.order_interval((2, 3, 4, 2, 6), EVENODD))
    assert eo == {(2, 3, 4, 2, 6): 2, (5, 4, 2, 6): 2, (2, 3, 6, 6): 2, (5, 6, 6): 2}
    assert cb.order_interval((1, 2)) == [((1, 2), 1)]


def test_interval_merges_original_descents_only():
    # (2,1,2) -> (3,2) -> (5) would be a chain of descending merges, but (5) is excluded
    assert (5,) not in dict(cb.order_interval((2, 1, 2)))


@pytest.mark.parametrize("order", [DESC, EVENODD], ids=lambda o: o.name)
def test_order_interval_properties(order):
    for n in range(1, 8):
        for alpha in cb.compositions(n):
            iv = cb.order_interval(alpha, order)
            assert len(iv) == 2 ** len(cb.merge_positions(alpha, order))
            assert len({b for b, _ in iv}) == len(iv)
            for beta, c in iv:
                assert c.denominator == 1 and c > 0
                assert cb.refines(alpha, beta) and cb.refines(beta, cb.C_max(alpha, order))
            m_fact = cb.coarsening_coefficient(alpha, alpha)
            assert dict(iv)[alpha] == m_fact


def test_quasi_shuffle_example():
    got = cb.quasi_shuffle((2, 3), (1,))
    assert got == Counter({(2, 3, 1): 1, (2, 1, 3): 1, (2, 4): 1, (1, 2, 3): 1, (3, 3): 1})
    assert cb.shuffle((1,), (1,)) == Counter({(1, 1): 2})
    assert cb.shuffle((), (2, 1)) == Counter({(2, 1): 1})


@given(compositions_st, compositions_st)
def test_shuffle_cardinalities(a, b):
    assert sum(cb.shuffle(a, b).values()) == comb(len(a) + len(b), len(a))
    # count merged-pair placements directly as lattice paths with diagonal steps
    paths = Counter()
    paths[(0, 0)] = 1
    for i in range(len(a) + 1):
        for j in range(len(b) + 1):
            if (i, j) == (0, 0):
                continue
            paths[(i, j)] = paths[(i - 1, j)] + paths[(i, j - 1)] + paths[(i - 1, j - 1)]
    assert sum(cb.quasi_shuffle(a, b).values()) == paths[(len(a), len(b))]


def test_mobius():
    assert cb.mobius((1, 1, 2, 1), (1, 3, 1)) == -1
    assert cb.mobius((2, 1), (2, 1)) == 1
    assert cb.mobius((1, 1, 1), (3,)) == 1
    # boolean lattice: sum over the interval vanishes
    for gamma in cb.compositions(5):
        for beta in cb.refinements(gamma):
            if beta != gamma:
                total = sum(cb.mobius(x, gamma) for x in cb.coarsenings(beta) if cb.refines(x, gamma))
                assert total == 0
    with pytest.raises(ValueError):
        cb.mobius((3,), (1, 2))


def test_rho_and_varrho():
    assert cb.rho(sc("5|13|2|4")) == (1, 2, 1, 1)
    assert cb.varrho((1, 6, 4, 3, 6)) == sc("1|4|3|25")
    assert cb.rho(tuple((i,) for i in range(1, 5))) == (1, 1, 1, 1)


def test_shifted_operations():
    got = cb.shifted_quasi_shuffle(sc("13|2"), sc("12"))
    want = [sc(s) for s in ["13|2|45", "13|45|2", "45|13|2", "1345|2", "13|245"]]
    assert got == Counter(want)
    assert cb.standardize(((3, 6), (2, 5))) == sc("24|13")
    assert cb.shifted_shuffle(sc("1"), sc("1")) == Counter([sc("1|2"), sc("2|1")])
    with pytest.raises(ValueError):
        cb.standardize(((1, 2), (2,)))


def test_shift_and_standardize_preserve_rho():
    for phi in cb.set_compositions(4):
        assert cb.rho(cb.shift_up(phi, 3)) == cb.rho(phi)
        assert cb.rho(cb.standardize(phi[1:])) == cb.rho(phi[1:])


def test_rho_C_rho_T_examples():
    phi = sc("2|5|14|36|7")
    assert cb.rho_C(phi) == (2, 5)
    assert cb.rho_T(phi) == (2, 1, 2, 2)
    assert cb.C_max_set(sc("1|3|25|6|4")) == sc("13|256|4")
    assert cb.rho_C(sc("1|2")) == (2,)
    assert cb.rho_T(sc("1|2")) == (2,)


def test_descending_divisions_remark():
    # ascent sums together with descent sums give all of set(rho(Phi))
    for n in range(1, 6):
        for phi in cb.set_compositions(n):
            sizes = list(itertools.accumulate(len(b) for b in phi))
            desc = {sizes[i - 1] for i in cb.set_order_descents(phi, DTILDE)}
            asc = cb.to_subset(cb.rho_C(phi))
            assert asc | desc == cb.to_subset(cb.rho(phi))
            assert cb.to_subset(cb.rho_T(phi)) == asc | (set(range(1, n)) - desc)


def test_block_orbit():
    assert cb.block_orbit(sc("1|2")) == [sc("1|2"), sc("2|1")]
    assert len(cb.block_orbit(sc("5|13|4|2"))) == 6
    assert set(cb.block_orbit(sc("12|34"))) == {sc("12|34"), sc("34|12")}
    for phi in cb.set_compositions(5):
        orbit = cb.block_orbit(phi)
        assert len(set(orbit)) == len(orbit)
        assert len(orbit) == cb.coarsening_coefficient(cb.rho(phi), cb.rho(phi))


def test_set_partitions():
    assert [len(cb.set_partitions(n)) for n in range(6)] == [1, 1, 2, 5, 15, 52]
    assert cb.canonical_set_partition([(2,), (1, 3)]) == ((1, 3), (2,))
    assert cb.canonical_set_partition([(1,), (2,)]) == ((2,), (1,))
    phi = cb.canonical_set_partition([(1, 3), (2,)])
    assert cb.set_partition_coarsenings(phi) == [((1, 2, 3),), ((1, 3), (2,))]
    assert len(cb.set_partition_coarsenings(((3,), (2,), (1,)))) == 5
    assert cb.set_partition_coarsenings(((1, 2, 3, 4, 5),)) == [((1, 2, 3, 4, 5),)]


def test_complement_and_reverse():
    assert cb.complement_blocks(sc("13|2|45")) == sc("35|4|12")
    assert cb.reverse((2, 1, 2)) == (2, 1, 2)
    assert cb.reverse(sc("5|13|4|2")) == sc("2|4|13|5")


def test_set_composition_validation():
    with pytest.raises(ValueError):
        cb.set_composition([(1,), (1, 2)])
    with pytest.raises(ValueError):
        cb.set_composition([(1,), (3,)])
    assert [len(cb.set_compositions(n)) for n in range(5)] == [1, 1, 3, 13, 75]


@pytest.mark.parametrize("order", [DTILDE, MED], ids=lambda o: o.name)
def test_set_interval_size(order):
    for phi in cb.set_compositions(4):
        iv = cb.set_order_interval(phi, order)
        assert len(iv) == len(set(iv)) == 2 ** len(cb.set_order_descents(phi, order))
