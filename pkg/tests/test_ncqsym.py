from collections import Counter

import pytest

from qpows import combinat as cb
from qpows import ncqsym as nc
from qpows import qsym as q
from qpows.orders import DTILDE, MED, MIN_ORDER, set_order

from oracles import NC_M_coefficients, words_from_M, words_mul

ORDERS = [DTILDE, MED, MIN_ORDER, set_order("reverse:dtilde")]
PROJECTIVE = [DTILDE, MED, set_order("reverse:dtilde")]
ZERO = nc.NcqElement.zero(nc.M_BASIS)


def sc(text):
    if not text:
        return ()
    return cb.set_composition(tuple(int(ch) for ch in b) for b in text.split("|"))


def sp(*blocks):
    return cb.canonical_set_partition(blocks)


def Ms(*texts):
    return sum((nc.Mn(sc(t)) for t in texts), ZERO)


def as_M(x):
    return nc.convert(x, nc.M_BASIS)


def upto(n):
    for k in range(n + 1):
        yield from cb.set_compositions(k)


def test_expand_P_examples():
    assert nc.expand_P_in_M(sc("14|2|3")) == Ms("14|2|3", "124|3", "14|23", "1234")
    assert nc.expand_P_in_M(sc("5|13|4|2")) == Ms("5|13|4|2", "5|134|2")
    x = nc.expand_P_in_M(sc("1|3|25|6|4"))
    assert len(x) == 4 and x.coefficient(sc("13|256|4")) == 1


@pytest.mark.parametrize("order", ORDERS, ids=lambda o: o.name)
def test_expansion_coefficients_and_inverse(order):
    pb = nc.P_basis(order)
    for phi in upto(4):
        x = nc.expand_P_in_M(phi, order)
        assert set(x.terms.values()) <= {1}
        assert len(x) == 2 ** len(cb.set_order_descents(phi, order))
        back = nc.m_to_p(x, order)
        assert back == nc.Pn(phi, order)
        m = nc.Mn(phi)
        assert as_M(nc.convert(m, pb)) == m
        assert all(c.denominator == 1 for c in nc.m_to_p(m, order).terms.values())


def test_m_to_p_examples():
    assert nc.m_to_p(nc.Mn(sc("12"))) == nc.Pn(sc("12"))
    assert nc.m_to_p(nc.Mn(sc("1|2"))) == nc.Pn(sc("1|2")) - nc.Pn(sc("12"))


def test_product_examples():
    assert nc.Pn(sc("1")) * nc.Pn(sc("1")) == nc.Pn(sc("1|2")) + nc.Pn(sc("2|1"))
    assert nc.Mn(sc("13|2")) * nc.Mn(sc("1")) == Ms("13|2|4", "13|4|2", "4|13|2", "134|2", "13|24")
    x = nc.Pn(sc("2|13"))
    assert x * nc.Pn(()) == x


def test_M_product_matches_words():
    for a in upto(3):
        for b in upto(5 - sum(len(x) for x in a)):
            k = len(a) + len(b)
            want = NC_M_coefficients(words_mul(words_from_M({a: 1}, k), words_from_M({b: 1}, k)))
            assert (nc.Mn(a) * nc.Mn(b)).terms == want, (a, b)


@pytest.mark.parametrize("order", ORDERS, ids=lambda o: o.name)
def test_P_product_matches_M(order):
    for a in upto(3):
        for b in upto(5 - sum(len(x) for x in a)):
            x, y = nc.Pn(a, order), nc.Pn(b, order)
            assert as_M(x * y) == as_M(x) * as_M(y), (a, b)


def test_coproduct_examples():
    t = nc.coproduct(nc.Pn(sc("13|2")))
    assert t.terms == {((), sc("13|2")): 1, (sc("12"), sc("1")): 1, (sc("13|2"), ()): 1}
    t = nc.coproduct(nc.Mn(sc("1")))
    assert t.terms == {((), sc("1")): 1, (sc("1"), ()): 1}
    for phi in cb.set_compositions(4):
        assert len(nc.coproduct(nc.Pn(phi))) == len(phi) + 1


def _tensor_in_M(t):
    to_m = lambda basis: (lambda k: as_M(nc.NcqElement(basis, {k: 1})).terms)
    return t.map_legs(to_m(t.left), to_m(t.right), nc.M_BASIS, nc.M_BASIS)


@pytest.mark.parametrize("order", ORDERS, ids=lambda o: o.name)
def test_P_coproduct_matches_M(order):
    for phi in upto(5):
        p = nc.Pn(phi, order)
        assert _tensor_in_M(nc.coproduct(p)) == nc.coproduct(as_M(p)), phi


def test_bialgebra_compatibility():
    for a in upto(3):
        for b in upto(3):
            if sum(map(len, a)) + sum(map(len, b)) > 4:
                continue
            lhs = nc.coproduct(nc.Mn(a) * nc.Mn(b))
            rhs = nc.tensor_product(nc.coproduct(nc.Mn(a)), nc.coproduct(nc.Mn(b)))
            assert lhs == rhs, (a, b)


def test_ncsym_examples():
    phi = sp((1, 3), (2,))
    assert nc.ncsym_p_expand(phi) == Ms("13|2", "2|13", "123")
    assert nc.ncsym_p_to_P(phi) == nc.Pn(sc("13|2")) + nc.Pn(sc("2|13"))
    assert nc.ncsym_m_to_M(sp((1, 2, 3))) == nc.ncsym_p_expand(sp((1, 2, 3))) == Ms("123")


@pytest.mark.parametrize("order", PROJECTIVE + [MIN_ORDER], ids=lambda o: o.name)
def test_powersums_refine(order):
    for n in range(1, 6):
        for phi in cb.set_partitions(n):
            coarse = nc.ncsym_p_expand(phi)
            assert coarse == nc.ncsym_p_expand_lsr(phi)
            assert as_M(nc.ncsym_p_to_P(phi, order)) == coarse


def test_ncsym_p_m_round_trip():
    for n in range(1, 5):
        for phi in cb.set_partitions(n):
            x = nc.ncp(phi)
            assert nc.ncsym_convert(nc.ncsym_convert(x, nc.ncm_BASIS), nc.ncp_BASIS) == x


def test_project_rho_examples():
    assert nc.project_rho(nc.Mn(sc("5|13|2|4"))) == q.M((1, 2, 1, 1))
    assert nc.project_rho(nc.expand_P_in_M(sc("5|13|4|2"))) == q.M((1, 2, 1, 1)) + q.M((1, 3, 1))
    assert nc.project_rho(nc.Mn(())) == q.M(())


def test_project_rho_is_multiplicative():
    for a in upto(3):
        for b in upto(2):
            lhs = nc.project_rho(nc.Mn(a) * nc.Mn(b))
            assert lhs == nc.project_rho(nc.Mn(a)) * nc.project_rho(nc.Mn(b))


def test_project_P_to_F_examples():
    assert nc.project_P_to_F(sc("5|13|4|2")) == q.F((1, 3, 1)) - q.F((1, 1, 2, 1))
    phi = sc("2|5|14|36|7")
    assert (cb.rho_T(phi, DTILDE), cb.rho_C(phi, DTILDE)) == ((2, 1, 2, 2), (2, 5))
    with pytest.raises(ValueError):
        nc.project_P_to_F(sc("1|2"), MIN_ORDER)


@pytest.mark.parametrize("order", PROJECTIVE, ids=lambda o: o.name)
def test_projection_theorems(order):
    for n in range(1, 5):
        for phi in cb.set_compositions(n):
            via_m = q.convert(nc.project_rho(nc.expand_P_in_M(phi, order)), q.F_BASIS)
            assert nc.project_P_to_F(phi, order) == via_m, phi
            want = q.expand_P_in_M(cb.rho(phi), order.projection)
            assert q.convert(nc.orbit_project_sum(phi, order), q.M_BASIS) == want, phi


def test_orbit_sum_examples():
    assert q.convert(nc.orbit_project_sum(sc("1|2")), q.M_BASIS) == 2 * q.M((1, 1)) + q.M((2,))
    assert q.convert(nc.orbit_project_sum(sc("12")), q.M_BASIS) == q.M((2,))
    with pytest.raises(ValueError):
        nc.orbit_project_sum(sc("1|2"), MIN_ORDER)


def test_equal_patterns_project_equally():
    for n in range(1, 5):
        groups = {}
        for phi in cb.set_compositions(n):
            key = (cb.rho(phi), frozenset(cb.set_order_descents(phi, DTILDE)))
            groups.setdefault(key, set()).add(nc.project_rho(nc.expand_P_in_M(phi)))
        assert all(len(v) == 1 for v in groups.values())


def test_orbit_count():
    assert nc.orbit_count(sc("1|23|4|5"), sc("1|2345")) == 3
    assert nc.orbit_count(sc("1|23|4|5"), sc("1|23|4|5")) == 6
    assert nc.orbit_count(sc("3|12"), sc("3|12")) == 1
    with pytest.raises(ValueError):
        nc.orbit_count(sc("1|23|4|5"), sc("12345"))


def test_complement_examples():
    a = nc.algebraic_complement(nc.Pn(sc("1|2")))
    assert a == nc.Pn(sc("2|1"), set_order("reverse:dtilde"))
    assert as_M(a) == Ms("2|1", "12")
    assert nc.coalgebraic_complement(nc.Mn(sc("13|2|45"))) == nc.Mn(sc("35|4|12"))
    c = nc.coalgebraic_complement(nc.Pn(sc("1|2")))
    assert c == nc.Pn(sc("2|1"), set_order("bar:dtilde"))
    assert as_M(c) == Ms("2|1", "12")


@pytest.mark.parametrize("order", ORDERS, ids=lambda o: o.name)
def test_complements_are_involutions_and_agree_with_M(order):
    for phi in upto(4):
        p = nc.Pn(phi, order)
        for f in (nc.algebraic_complement, nc.coalgebraic_complement):
            assert nc.convert(f(f(p)), p.basis) == p
            assert as_M(f(p)) == f(as_M(p)), (f.__name__, phi)


def _mr_product(u, v):
    """Shifted shuffle of permutation words, computed on words."""
    v = tuple(x + len(u) for x in v)
    out = Counter()

    def rec(i, j, acc):
        if i == len(u) and j == len(v):
            out[tuple(acc)] += 1
            return
        if i < len(u):
            rec(i + 1, j, acc + [u[i]])
        if j < len(v):
            rec(i, j + 1, acc + [v[j]])

    rec(0, 0, [])
    return out


def _std(word):
    rank = {x: i + 1 for i, x in enumerate(sorted(word))}
    return tuple(rank[x] for x in word)


def test_fqsym_examples():
    assert nc.fqsym_G((2, 1)) == nc.Pn(sc("2|1"))
    g = nc.fqsym_G((1, 2)) * nc.fqsym_G((1,))
    assert g == nc.fqsym_G((1, 2, 3)) + nc.fqsym_G((1, 3, 2)) + nc.fqsym_G((3, 1, 2))
    with pytest.raises(ValueError):
        nc.fqsym_G((1, 1))


def test_fqsym_matches_word_operations():
    import itertools

    perms = [p for n in range(0, 4) for p in itertools.permutations(range(1, n + 1))]
    for u in perms:
        for v in perms:
            if len(u) + len(v) > 4:
                continue
            want = sum((nc.fqsym_G(w).scale(c) for w, c in _mr_product(u, v).items()), nc.NcqElement.zero(nc.P_basis()))
            assert nc.fqsym_G(u) * nc.fqsym_G(v) == want
    for u in perms:
        got = nc.coproduct(nc.fqsym_G(u)).terms
        want = {(tuple((x,) for x in _std(u[:i])), tuple((x,) for x in _std(u[i:]))): 1 for i in range(len(u) + 1)}
        assert got == want
