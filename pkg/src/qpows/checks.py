"""Oracle suites comparing the closed formulas against monomial-basis computations.

Each suite returns a :class:`CheckResult`; ``selftest`` in the CLI and the
acceptance tests both run these.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from dataclasses import dataclass
from typing import Callable

from . import combinat as cb
from . import fillings, ncqsym as nq, nsym, qsym as q, ribbon
from .orders import DESC, DTILDE, EVENODD, INT_ORDER_NAMES, MED, MIN_ORDER, int_order, set_order

INT_ORDERS = tuple(int_order(n) for n in INT_ORDER_NAMES)
PROJECTIVE_SET_ORDERS = (DTILDE, MED, set_order("reverse:dtilde"), set_order("lift:evenodd"))


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    seconds: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.name}: {self.checked} identities in {self.seconds:.2f}s{tail}"


class _Tally:
    def __init__(self):
        self.checked = 0
        self.failure = ""

    def expect(self, ok: bool, what: Callable[[], str]):
        self.checked += 1
        if not ok and not self.failure:
            self.failure = what()


def _run(name: str, body: Callable[[_Tally], None]) -> CheckResult:
    tally = _Tally()
    start = time.perf_counter()
    try:
        body(tally)
    except Exception as exc:  # a crash is a failed check, reported with its message
        tally.failure = tally.failure or f"{type(exc).__name__}: {exc}"
    return CheckResult(name, not tally.failure, tally.checked, time.perf_counter() - start, tally.failure)


def _M(terms) -> q.QsymElement:
    return q.QsymElement(q.M_BASIS, terms)


def _Mn(terms) -> nq.NcqElement:
    return nq.NcqElement(nq.M_BASIS, terms)


def _sc(text: str) -> tuple:
    """Compressed set composition literal like ``5|13|4|2``."""
    return cb.set_composition(tuple(int(ch) for ch in block) for block in text.split("|"))


# ------------------------------------------------------------------ goldens

def golden_identities() -> CheckResult:
    def body(t: _Tally):
        t.expect(
            q.expand_P_in_M((2, 1, 2)) == _M({(2, 1, 2): 2, (3, 2): 2}),
            lambda: "P_212",
        )
        t.expect(
            q.expand_P_in_M((1, 2, 1, 1))
            == _M({(1, 2, 1, 1): 6, (1, 2, 2): 3, (1, 3, 1): 6, (1, 4): 3}),
            lambda: "P_1211",
        )
        t.expect(
            q.sym_p_to_m((2, 2, 1))
            == q.SymElement(q.m_BASIS, {(2, 2, 1): 2, (3, 2): 2, (4, 1): 1, (5,): 1}),
            lambda: "p_221",
        )
        t.expect(
            q.expand_P_in_M((2, 3, 4, 2, 6), EVENODD)
            == _M({(2, 3, 4, 2, 6): 2, (5, 4, 2, 6): 2, (2, 3, 6, 6): 2, (5, 6, 6): 2}),
            lambda: "P^E_23426",
        )
        t.expect(cb.C_max((3, 2, 1, 1, 3, 1, 1, 1, 2, 1)) == (7, 6, 3), lambda: "C(3211311121)")
        t.expect(
            q.coproduct(q.M((4, 1, 3))).terms
            == {((), (4, 1, 3)): 1, ((4,), (1, 3)): 1, ((4, 1), (3,)): 1, ((4, 1, 3), ()): 1},
            lambda: "Delta(M_413)",
        )
        t.expect(
            q.M((2, 3)) * q.M((1,))
            == _M({(2, 3, 1): 1, (2, 1, 3): 1, (2, 4): 1, (1, 2, 3): 1, (3, 3): 1}),
            lambda: "M_23 M_1",
        )

    return _run("golden identities", body)


def golden_p_to_f() -> CheckResult:
    def body(t: _Tally):
        want = q.QsymElement(
            q.F_BASIS, {(1, 1, 2, 1): -3, (1, 1, 3): -3, (1, 3, 1): 3, (1, 4): 3}
        )
        t.expect(q.expand_P_in_F((1, 2, 1, 1)) == want, lambda: "P_1211 in F")
        t.expect(q.convert(q.P((1, 2, 1, 1)), q.F_BASIS) == want, lambda: "P_1211 via M")
        t.expect(ribbon.height((1, 1, 3), (1, 2, 1, 1)) == 1, lambda: "ht(113,1211)")
        t.expect(ribbon.sdr_count((1, 1, 3), (1, 2, 1, 1)) == 3, lambda: "|SDR(113,1211)|")

    return _run("P to F goldens", body)


def golden_ncqsym() -> CheckResult:
    def body(t: _Tally):
        def expands(phi: str, terms: list[str]) -> bool:
            return nq.expand_P_in_M(_sc(phi)) == _Mn({_sc(s): 1 for s in terms})

        t.expect(expands("14|2|3", ["14|2|3", "124|3", "14|23", "1234"]), lambda: "P_14|2|3")
        t.expect(expands("5|13|4|2", ["5|13|4|2", "5|134|2"]), lambda: "P_5|13|4|2")
        t.expect(
            expands("1|3|25|6|4", ["1|3|25|6|4", "13|25|6|4", "1|3|256|4", "13|256|4"]),
            lambda: "P_1|3|25|6|4",
        )
        phi = _sc("2|5|14|36|7")
        t.expect(cb.rho_C(phi) == (2, 5), lambda: f"rho_C = {cb.rho_C(phi)}")
        t.expect(cb.rho_T(phi) == (2, 1, 2, 2), lambda: f"rho_T = {cb.rho_T(phi)}")
        t.expect(
            nq.coalgebraic_complement(nq.Mn(_sc("13|2|45"))) == nq.Mn(_sc("35|4|12")),
            lambda: "complement of M_13|2|45",
        )

    return _run("NCQSym goldens", body)


# ----------------------------------------------------------------- oracles

def dd_fillings_oracle(max_n: int = 6, orders=(DESC, EVENODD)) -> CheckResult:
    """Column readings of DD fillings against the weighted interval."""

    def body(t: _Tally):
        for order in orders:
            for n in range(1, max_n + 1):
                for alpha in cb.compositions(n):
                    got = Counter(fillings.column_reading(f) for f in fillings.enumerate_DD(alpha, order))
                    want = {beta: int(c) for beta, c in cb.order_interval(alpha, order)}
                    t.expect(got == want, lambda: f"{order.name} {alpha}")

    return _run("DD fillings vs interval", body)


def p_to_f_theorem(max_n: int = 7, orders=INT_ORDERS) -> CheckResult:
    def body(t: _Tally):
        for order in orders:
            for n in range(1, max_n + 1):
                for alpha in cb.compositions(n):
                    oracle = q.convert(q.expand_P_in_M(alpha, order), q.F_BASIS)
                    t.expect(q.expand_P_in_F(alpha, order) == oracle, lambda: f"{order.name} {alpha}")

    return _run("P to F theorem", body)


def _index_pairs(max_total: int, family: Callable[[int], tuple]):
    for total in range(max_total + 1):
        for a in range(total + 1):
            for x in family(a):
                for y in family(total - a):
                    yield x, y


def hopf_suite(max_qsym: int = 6, max_ncq: int = 5, max_antipode: int = 6) -> CheckResult:
    def body(t: _Tally):
        for order in (DESC, EVENODD):
            for kind in (q.P_basis(order), q.Pt_basis(order)):
                for a, b in _index_pairs(max_qsym, cb.compositions):
                    x, y = q.QsymElement(kind, {a: 1}), q.QsymElement(kind, {b: 1})
                    via_m = q.convert(q.convert(x, q.M_BASIS) * q.convert(y, q.M_BASIS), kind)
                    t.expect(x * y == via_m, lambda: f"product {kind.name}^{order.name} {a}*{b}")
                for n in range(max_qsym + 1):
                    for g in cb.compositions(n):
                        x = q.QsymElement(kind, {g: 1})
                        back = lambda k: q.convert(q.M(k), kind).terms  # noqa: E731
                        via_m = q.coproduct(q.convert(x, q.M_BASIS)).map_legs(back, back, kind, kind)
                        t.expect(q.coproduct(x) == via_m, lambda: f"coproduct {kind.name}^{order.name} {g}")
        for n in range(max_antipode + 1):
            for g in cb.compositions(n):
                x = q.Pt(g)
                total = q.QsymElement(x.basis, {})
                for (left, right), c in q.coproduct(x).terms.items():
                    total = total + q.antipode(q.Pt(left)) * q.Pt(right) * c
                unit = q.QsymElement(x.basis, {(): 1} if not g else {})
                t.expect(total == unit, lambda: f"antipode axiom Pt_{g}")
                want = _M({b: (-1) ** len(g) for b in cb.coarsenings(cb.reverse(g))})
                t.expect(q.antipode(q.M(g)) == want, lambda: f"S(M_{g})")
        for a, b in _index_pairs(max_qsym, cb.compositions):
            x, y = q.M(a), q.M(b)
            t.expect(
                q.coproduct(x * y) == q.tensor_product(q.coproduct(x), q.coproduct(y)),
                lambda: f"Delta(M_{a} M_{b})",
            )
        for order in (DTILDE, MED, MIN_ORDER):
            kind = nq.P_basis(order)
            for a, b in _index_pairs(max_ncq, cb.set_compositions):
                x, y = nq.NcqElement(kind, {a: 1}), nq.NcqElement(kind, {b: 1})
                via_m = nq.convert(nq.convert(x, nq.M_BASIS) * nq.convert(y, nq.M_BASIS), kind)
                t.expect(x * y == via_m, lambda: f"NCQSym product {order.name} {a}*{b}")
            for n in range(max_ncq + 1):
                for g in cb.set_compositions(n):
                    x = nq.NcqElement(kind, {g: 1})
                    back = lambda k: nq.m_to_p(nq.Mn(k), order).terms  # noqa: E731
                    via_m = nq.coproduct(nq.convert(x, nq.M_BASIS)).map_legs(back, back, kind, kind)
                    t.expect(nq.coproduct(x) == via_m, lambda: f"NCQSym coproduct {order.name} {g}")

    return _run("Hopf suite", body)


def duality_suite(max_natural: int = 7, max_evenodd: int = 6) -> CheckResult:
    def body(t: _Tally):
        for order, top in ((DESC, max_natural), (EVENODD, max_evenodd)):
            for n in range(1, top + 1):
                t.expect(nsym.duality_check(n, order), lambda: f"{order.name} n={n}")

    return _run("duality", body)


def refinement_suite(max_sym: int = 6, max_ncsym: int = 5) -> CheckResult:
    def body(t: _Tally):
        for order in INT_ORDERS:
            for n in range(1, max_sym + 1):
                for lam in cb.partitions(n):
                    lhs = q.convert(q.sym_p_to_P(lam, order), q.M_BASIS)
                    rhs = q.sym_to_qsym(q.sym_p(lam))
                    t.expect(lhs == rhs, lambda: f"p_{lam} under {order.name}")
        for order in (DTILDE, MED, MIN_ORDER):
            for n in range(1, max_ncsym + 1):
                for phi in cb.set_partitions(n):
                    coarse = nq.ncsym_p_expand(phi)
                    t.expect(coarse == nq.ncsym_p_expand_lsr(phi), lambda: f"LSR route {phi}")
                    lhs = nq.convert(nq.ncsym_p_to_P(phi, order), nq.M_BASIS)
                    t.expect(lhs == coarse, lambda: f"p_{phi} under {order.name}")

    return _run("refinement", body)


def projection_suite(max_n: int = 5, orders=PROJECTIVE_SET_ORDERS) -> CheckResult:
    def body(t: _Tally):
        for order in orders:
            for n in range(1, max_n + 1):
                groups: dict = {}
                for phi in cb.set_compositions(n):
                    t.expect(
                        nq.orbit_project_sum(phi, order) == nq.orbit_project_expected(phi, order),
                        lambda: f"orbit sum {order.name} {phi}",
                    )
                    oracle = q.convert(nq.project_rho(nq.Pn(phi, order)), q.F_BASIS)
                    t.expect(nq.project_P_to_F(phi, order) == oracle, lambda: f"F image {order.name} {phi}")
                    supports = {}
                    for psi in cb.block_orbit(phi):
                        supports.setdefault(cb.rho_C(psi, order), set()).update(
                            nq.project_P_to_F(psi, order).support()
                        )
                    for s1, s2 in itertools.combinations(supports.values(), 2):
                        t.expect(not (s1 & s2), lambda: f"disjointness {order.name} {phi}")
                    key = (cb.rho(phi), cb.set_order_descents(phi, order))
                    groups.setdefault(key, []).append(nq.project_rho(nq.Pn(phi, order)))
                for members in groups.values():
                    t.expect(all(m == members[0] for m in members), lambda: f"rho agreement {order.name}")

    return _run("projection", body)


def involution_suite(max_n: int = 6, max_complement: int = 5) -> CheckResult:
    def body(t: _Tally):
        for n in range(1, max_n + 1):
            for alpha in cb.compositions(n):
                for basis in (q.M_BASIS, q.F_BASIS, q.E_BASIS):
                    x = q.QsymElement(basis, {alpha: 1})
                    for f in (q.star, q.omega, q.psi):
                        t.expect(f(f(x)) == x, lambda: f"{f.__name__} twice on {basis.name}_{alpha}")
                    t.expect(q.psi(x) == q.omega(q.star(x)), lambda: f"psi = omega star on {alpha}")
                for order in (DESC, EVENODD):
                    x = q.P(alpha, order)
                    rev = order.reversed()
                    m = q.convert(x, q.M_BASIS)
                    star_m = q.convert(q.star(m), q.P_basis(rev))
                    t.expect(q.star(x) == star_m, lambda: f"star P^{order.name}_{alpha}")
                    omega_f = q.convert(q.omega(q.convert(x, q.F_BASIS)), x.basis)
                    t.expect(q.omega(x) == omega_f, lambda: f"omega P^{order.name}_{alpha}")
                    psi_f = q.convert(q.star(q.omega(q.convert(x, q.F_BASIS))), q.P_basis(rev))
                    t.expect(q.psi(x) == psi_f, lambda: f"psi P^{order.name}_{alpha}")
                    e_form = q.QsymElement(
                        q.E_BASIS,
                        {b: cb.sign_eps(alpha) * cb.sign_eps(b) * c for b, c in cb.order_interval(alpha, rev)},
                    )
                    t.expect(q.convert(x, q.E_BASIS) == e_form, lambda: f"E expansion {alpha}")
        for order in (DTILDE, MED, MIN_ORDER):
            for n in range(1, max_complement + 1):
                for phi in cb.set_compositions(n):
                    x = nq.Pn(phi, order)
                    m = nq.convert(x, nq.M_BASIS)
                    for f in (nq.algebraic_complement, nq.coalgebraic_complement):
                        t.expect(f(f(x)) == x, lambda: f"{f.__name__} twice {phi}")
                        t.expect(nq.convert(f(x), nq.M_BASIS) == f(m), lambda: f"{f.__name__} {order.name} {phi}")

    return _run("involutions", body)


def _word_shifted_shuffle(u: tuple, v: tuple) -> Counter:
    return cb.shuffle(u, tuple(x + len(u) for x in v))


def _std_word(w: tuple) -> tuple:
    rank = {x: k for k, x in enumerate(sorted(w), start=1)}
    return tuple(rank[x] for x in w)


def fqsym_suite(max_n: int = 4) -> CheckResult:
    """Products and coproducts of G against permutation words."""

    def body(t: _Tally):
        perms = lambda n: list(itertools.permutations(range(1, n + 1)))  # noqa: E731
        basis = nq.P_basis(DTILDE)
        to_p = lambda w: {tuple((x,) for x in w): 1}  # noqa: E731
        for a, b in _index_pairs(max_n, perms):
            want = nq.NcqElement(basis, {})
            for w, c in _word_shifted_shuffle(a, b).items():
                want = want + nq.NcqElement(basis, to_p(w)).scale(c)
            got = nq.m_to_p(nq.convert(nq.fqsym_G(a), nq.M_BASIS) * nq.convert(nq.fqsym_G(b), nq.M_BASIS))
            t.expect(got == want, lambda: f"G_{a} G_{b}")
        for n in range(max_n + 1):
            for w in perms(n):
                want = {}
                for i in range(n + 1):
                    key = (tuple((x,) for x in _std_word(w[:i])), tuple((x,) for x in _std_word(w[i:])))
                    want[key] = 1
                back = lambda k: nq.m_to_p(nq.Mn(k)).terms  # noqa: E731
                got = nq.coproduct(nq.convert(nq.fqsym_G(w), nq.M_BASIS)).map_legs(back, back, basis, basis)
                t.expect(got.terms == want, lambda: f"Delta G_{w}")

    return _run("FQSym", body)


def all_suites(max_degree: int = 8) -> list:
    """Every suite with its sizes capped at ``max_degree``."""
    d = max_degree
    return [
        golden_identities,
        golden_p_to_f,
        golden_ncqsym,
        lambda: dd_fillings_oracle(min(6, d)),
        lambda: p_to_f_theorem(min(7, d)),
        lambda: hopf_suite(min(6, d), min(5, d), min(6, d)),
        lambda: duality_suite(min(7, d), min(6, d)),
        lambda: refinement_suite(min(6, d), min(5, d)),
        lambda: projection_suite(min(5, d)),
        lambda: involution_suite(min(6, d), min(5, d)),
        lambda: fqsym_suite(min(4, d)),
    ]


def run_all(max_degree: int = 8) -> list:
    return [suite() for suite in all_suites(max_degree)]
