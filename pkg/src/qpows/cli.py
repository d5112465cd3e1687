"""Command line front end: ``qpows eval``, ``qpows dualcheck``, ``qpows selftest``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import checks, combinat as cb, ncqsym as nq, nsym, qsym as q, ribbon
from .algebra import Basis, SparseElement, Tensor
from .orders import DESC, DTILDE, IntOrder, SetOrder, lift, resolve_order
from .parser import Atom, BinOp, Call, IndexLit, Name, Neg, Num, parse

DEFAULT_MAX_DEGREE = 8


class EvalError(ValueError):
    pass


def max_degree() -> int:
    raw = os.environ.get("QPOWS_MAX_DEGREE", str(DEFAULT_MAX_DEGREE))
    try:
        return int(raw)
    except ValueError:
        raise EvalError(f"QPOWS_MAX_DEGREE must be an integer, got {raw!r}") from None


# ------------------------------------------------------------------ formatting

def _index_degree(index) -> int:
    if index and isinstance(index[0], tuple):
        return sum(len(b) for b in index)
    return sum(index)


def _sort_key(index):
    # degree, then longer indices first, then lexicographic
    return (_index_degree(index), -len(index), index)


def _index_text(basis: Basis, index) -> str:
    if basis.space in ("ncqsym", "ncsym"):
        sep = "/" if basis.space == "ncsym" else "|"
        return "{" + sep.join(",".join(map(str, b)) for b in index) + "}"
    return "[" + ",".join(map(str, index)) + "]"


_DISPLAY = {("ncqsym", "M"): "Mn", ("ncqsym", "P"): "Pn", ("ncsym", "m"): "ncm", ("ncsym", "p"): "ncp"}
_DEFAULT_ORDER = {"qsym": DESC, "nsym": DESC, "ncqsym": DTILDE}


def basis_label(basis: Basis, active=None) -> str:
    name = _DISPLAY.get((basis.space, basis.name), basis.name)
    if basis.order is not None:
        expected = active if active is not None else _DEFAULT_ORDER.get(basis.space)
        if basis.order != expected:
            name += f"<{basis.order.name}>"
    return name


def _coeff_text(c: Fraction, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    mag = abs(c)
    body = "" if mag == 1 else f"{mag}*"
    if first:
        return sign + body
    return f" {sign} {body}"


def format_text(x, active=None) -> str:
    if isinstance(x, Tensor):
        if x.is_zero():
            return "0"
        ll, rl = basis_label(x.left, active), basis_label(x.right, active)
        items = sorted(
            x.terms.items(),
            key=lambda kv: (_index_degree(kv[0][0]) + _index_degree(kv[0][1]), _sort_key(kv[0][0]), _sort_key(kv[0][1])),
        )
        parts = []
        for k, ((a, b), c) in enumerate(items):
            parts.append(_coeff_text(c, k == 0) + f"{ll}{_index_text(x.left, a)} (x) {rl}{_index_text(x.right, b)}")
        return "".join(parts)
    if isinstance(x, SparseElement):
        if x.is_zero():
            return "0"
        label = basis_label(x.basis, active)
        items = sorted(x.terms.items(), key=lambda kv: _sort_key(kv[0]))
        return "".join(
            _coeff_text(c, k == 0) + label + _index_text(x.basis, idx) for k, (idx, c) in enumerate(items)
        )
    if isinstance(x, bool):
        return "ok" if x else "fail"
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, int):
        return str(x)
    if isinstance(x, tuple):
        if x and isinstance(x[0], tuple):
            return "{" + "|".join(",".join(map(str, b)) for b in x) + "}"
        return "[" + ",".join(map(str, x)) + "]"
    return str(x)


def _json_index(index):
    return [list(b) for b in index] if index and isinstance(index[0], tuple) else list(index)


def _basis_fields(basis: Basis) -> dict:
    out = {"basis": basis.name}
    if basis.order is not None:
        out["order"] = basis.order.name
    return out


def to_record(x) -> dict:
    if isinstance(x, Tensor):
        items = sorted(
            x.terms.items(),
            key=lambda kv: (_index_degree(kv[0][0]) + _index_degree(kv[0][1]), _sort_key(kv[0][0]), _sort_key(kv[0][1])),
        )
        rec = {"space": x.space, "left": _basis_fields(x.left), "right": _basis_fields(x.right)}
        rec["pairs"] = [
            {"left": _json_index(a), "right": _json_index(b), "num": c.numerator, "den": c.denominator}
            for (a, b), c in items
        ]
        return rec
    if isinstance(x, SparseElement):
        rec = {"space": x.space, **_basis_fields(x.basis)}
        rec["terms"] = [
            {"index": _json_index(idx), "num": c.numerator, "den": c.denominator}
            for idx, c in sorted(x.terms.items(), key=lambda kv: _sort_key(kv[0]))
        ]
        return rec
    if isinstance(x, bool):
        return {"value": x}
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return {"num": x.numerator, "den": x.denominator}
    if isinstance(x, tuple):
        return {"value": _json_index(x)}
    raise EvalError(f"cannot format {type(x).__name__}")


def format_json(x) -> str:
    return json.dumps(to_record(x), separators=(",", ":"))


# ------------------------------------------------------------------ evaluation

class Evaluator:
    def __init__(self, order_name: str | None = None, cap: int | None = None):
        self.cap = max_degree() if cap is None else cap
        self.order = resolve_order(order_name) if order_name else None

    # order resolution per space
    def int_order(self, name: str | None = None) -> IntOrder:
        order = resolve_order(name) if name else self.order
        if order is None:
            return DESC
        if isinstance(order, SetOrder):
            if order.projection is None:
                raise EvalError(f"order {order.name} does not project to an integer order")
            return order.projection
        return order

    def set_order(self, name: str | None = None) -> SetOrder:
        order = resolve_order(name) if name else self.order
        if order is None:
            return DTILDE
        if isinstance(order, IntOrder):
            return lift(order)
        return order

    def active_for(self, space: str):
        if self.order is None:
            return None
        if space in ("qsym", "nsym"):
            return self.int_order()
        if space == "ncqsym":
            return self.set_order()
        return None

    def check_degree(self, d: int, what: str):
        if d > self.cap:
            raise EvalError(f"{what} has degree {d}, above the limit {self.cap} (QPOWS_MAX_DEGREE)")

    def check_size(self, k: int, what: str):
        if k > self.cap:
            raise EvalError(f"{what} has {k} parts, above the limit {self.cap} (QPOWS_MAX_DEGREE)")

    def check_refinements(self, x: SparseElement, what: str):
        """Operations that enumerate refinements cost 2^(degree-1) per term."""
        self.check_degree(_max_degree(x), what)

    def basis(self, name: str, order: str | None = None) -> Basis:
        if name in ("M", "F", "E", "P", "Pt"):
            return q.qsym_basis(name, self.int_order(order))
        if name == "S":
            return nsym.S_BASIS
        if name == "Z":
            return nsym.Z_basis(self.int_order(order))
        if name in ("Mn", "Pn"):
            return nq.ncq_basis(name[0], self.set_order(order))
        if name == "p":
            return q.p_BASIS
        if name == "m":
            return q.m_BASIS
        if name == "ncm":
            return nq.ncm_BASIS
        if name == "ncp":
            return nq.ncp_BASIS
        raise EvalError(f"unknown basis {name!r}")

    def atom(self, node: Atom):
        if node.basis == "G":
            self.check_degree(len(node.index), "G index")
            return nq.fqsym_G(node.index)
        basis = self.basis(node.basis, node.order)
        idx = node.index
        if basis.space in ("ncqsym", "ncsym"):
            idx = cb.set_composition(idx)
            if basis.space == "ncsym":
                idx = cb.canonical_set_partition(idx)
        elif basis.space == "sym":
            idx = cb.sort_partition(idx)
        if basis.space in ("ncqsym", "ncsym"):
            self.check_degree(_index_degree(idx), f"index {format_text(idx)}")
        else:
            self.check_size(len(idx), f"index {format_text(idx)}")
        cls = {
            "qsym": q.QsymElement, "nsym": nsym.NsymElement, "ncqsym": nq.NcqElement,
            "sym": q.SymElement, "ncsym": nq.NcsymElement,
        }[basis.space]
        return cls(basis, {idx: 1})

    def eval(self, node):
        if isinstance(node, Num):
            return node.value
        if isinstance(node, Atom):
            return self.atom(node)
        if isinstance(node, IndexLit):
            return node.index
        if isinstance(node, Name):
            raise EvalError(f"basis name {node.name} needs an index")
        if isinstance(node, Neg):
            return self.binop("*", Fraction(-1), self.eval(node.arg))
        if isinstance(node, BinOp):
            return self.binop(node.op, self.eval(node.left), self.eval(node.right))
        if isinstance(node, Call):
            return self.call(node)
        raise EvalError(f"cannot evaluate {node!r}")

    def binop(self, op: str, a, b):
        scalar = lambda v: isinstance(v, Fraction)  # noqa: E731
        linear = lambda v: isinstance(v, (SparseElement, Tensor))  # noqa: E731
        if scalar(a) and scalar(b):
            if op == "/" and b == 0:
                raise EvalError("division by zero")
            return {"+": a + b, "-": a - b, "*": a * b, "/": a / b if b else None}[op]
        if op in "+-":
            if not (linear(a) and linear(b)):
                raise EvalError("cannot add a scalar and an element")
            if type(a) is not type(b) or a.space != b.space:
                raise EvalError(f"cannot add {a.space} and {b.space} elements")
            if isinstance(a, Tensor):
                return a + b if op == "+" else a - b
            return a + b if op == "+" else a - b
        if op == "/":
            if linear(a) and scalar(b):
                if b == 0:
                    raise EvalError("division by zero")
                return a.scale(1 / b)
            raise EvalError("can only divide by a scalar")
        if scalar(a) and linear(b):
            return b.scale(a)
        if linear(a) and scalar(b):
            return a.scale(b)
        if isinstance(a, SparseElement) and isinstance(b, SparseElement):
            if a.space != b.space:
                raise EvalError(f"cannot multiply {a.space} and {b.space} elements")
            if a.space in ("ncqsym", "ncsym"):
                self.check_degree(_max_degree(a) + _max_degree(b), "product")
            else:
                self.check_size(_max_length(a) + _max_length(b), "product")
                if a.basis.name in ("F", "E") or b.basis.name in ("F", "E"):
                    self.check_degree(_max_degree(a) + _max_degree(b), "product")
            return a * b
        raise EvalError("unsupported operands for *")

    def _element(self, v, fname: str) -> SparseElement:
        if not isinstance(v, SparseElement):
            raise EvalError(f"{fname} expects an element")
        return v

    def _index(self, v, kind: str, fname: str):
        if isinstance(v, SparseElement) and len(v) == 1:
            v = next(iter(v.terms))
        if not isinstance(v, tuple):
            raise EvalError(f"{fname} expects a {kind} literal")
        if kind == "set":
            return cb.set_composition(v)
        return cb.composition(v)

    def call(self, node: Call):
        f, args = node.func, node.args
        arity = {"convert": 2, "height": 2, "sdr": 2}.get(f, 1)
        if len(args) != arity:
            raise EvalError(f"{f} takes {arity} argument{'s' if arity > 1 else ''}")
        if f == "convert":
            x = self._element(self.eval(args[0]), f)
            target = args[1]
            if isinstance(target, Name):
                basis = self.basis(target.name)
            elif isinstance(target, Atom):
                raise EvalError("convert target must be a bare basis name")
            else:
                raise EvalError("convert target must be a basis name")
            if x.space == "sym" and basis.space == "qsym":
                return x.convert(basis)
            if x.space == "ncsym" and basis.space == "ncqsym":
                return x.convert(basis)
            if x.space != basis.space:
                raise EvalError(f"cannot convert {x.space} element to {basis.space} basis {target.name}")
            if {x.basis.name, basis.name} & {"F", "S", "Z"}:
                self.check_refinements(x, "convert argument")
            return x.convert(basis)
        if f == "dualcheck":
            n = self.eval(args[0])
            if not isinstance(n, Fraction) or n.denominator != 1 or n < 1:
                raise EvalError("dualcheck expects a positive integer")
            self.check_degree(int(n), "dualcheck")
            return nsym.duality_check(int(n), self.int_order())
        if f in ("cmax", "tmin"):
            alpha = self._index(self.eval(args[0]), "composition", f)
            fn = cb.C_max if f == "cmax" else cb.T_min
            return fn(alpha, self.int_order())
        if f in ("height", "sdr"):
            beta = self._index(self.eval(args[0]), "composition", f)
            alpha = self._index(self.eval(args[1]), "composition", f)
            try:
                fn = ribbon.height if f == "height" else ribbon.sdr_count
                return Fraction(fn(beta, alpha))
            except ValueError as exc:
                raise EvalError(str(exc)) from None
        if f in ("rhoc", "rhot"):
            phi = self._index(self.eval(args[0]), "set", f)
            fn = cb.rho_C if f == "rhoc" else cb.rho_T
            return fn(phi, self.set_order())
        if f == "orbitsum":
            phi = self._index(self.eval(args[0]), "set", f)
            return nq.orbit_project_sum(phi, self.set_order())
        x = self._element(self.eval(args[0]), f)
        if f == "coproduct":
            if x.space not in ("qsym", "ncqsym"):
                raise EvalError(f"coproduct is available on qsym and ncqsym, not {x.space}")
            if x.basis.name == "F":
                self.check_refinements(x, "coproduct argument")
            return x.coproduct()
        if f == "antipode":
            if x.space != "qsym":
                raise EvalError("antipode is available on qsym only")
            if x.basis.name == "F":
                self.check_refinements(x, "antipode argument")
            return q.antipode(x)
        if f in ("star", "omega", "psi"):
            if x.space != "qsym":
                raise EvalError(f"{f} is available on qsym only")
            if f != "star" and x.basis.name not in ("P", "Pt"):
                self.check_refinements(x, f"{f} argument")
            return q.involution(x, f)
        if f == "project":
            if x.space != "ncqsym":
                raise EvalError("project expects an ncqsym element")
            if x.basis.name == "P" and x.basis.order.projection is None:
                raise EvalError(f"order {x.basis.order.name} does not project under rho")
            return nq.project_rho(x)
        if f in ("algcomp", "coalgcomp"):
            if x.space != "ncqsym":
                raise EvalError(f"{f} expects an ncqsym element")
            return nq.algebraic_complement(x) if f == "algcomp" else nq.coalgebraic_complement(x)
        raise EvalError(f"unknown function {f!r}")


def _max_degree(x) -> int:
    return max((_index_degree(k) for k in x.terms), default=0)


def _max_length(x) -> int:
    return max((len(k) for k in x.terms), default=0)


def evaluate(text: str, order: str | None = None, cap: int | None = None):
    return Evaluator(order, cap).eval(parse(text))


def render(value, mode: str = "text", ev: Evaluator | None = None) -> str:
    if mode == "json":
        return format_json(value)
    space = getattr(value, "space", None)
    active = ev.active_for(space) if ev and space else None
    return format_text(value, active)


# ------------------------------------------------------------------ commands

def _cmd_eval(args) -> int:
    ev = Evaluator(args.order)
    value = ev.eval(parse(args.expr))
    print(render(value, "json" if args.json else "text", ev))
    return 0


def _cmd_dualcheck(args) -> int:
    ev = Evaluator(args.order)
    if args.n < 1:
        raise EvalError("degree must be positive")
    ev.check_degree(args.n, "dualcheck")
    ok = nsym.duality_check(args.n, ev.int_order())
    print("ok" if ok else "fail")
    return 0 if ok else 1


def _cmd_selftest(args) -> int:
    cap = max_degree()
    degree = min(args.max_degree, cap) if args.max_degree else cap
    failures = 0
    results = []
    for suite in checks.all_suites(degree):
        res = suite()
        results.append(res)
        print(res.line(), flush=True)
        failures += not res.passed
    total = sum(r.checked for r in results)
    if failures:
        print(f"selftest: {failures} of {len(results)} suites failed")
        return 1
    print(f"selftest: all {len(results)} suites passed ({total} identities, max degree {degree})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qpows", description="Exact quasisymmetric powersum calculator.")
    sub = ap.add_subparsers(dest="command", required=True)
    ev = sub.add_parser("eval", help="evaluate an expression")
    ev.add_argument("expr")
    ev.add_argument("--order", default=None, help="desc, evenodd, dtilde, med, min, reverse:<name>, bar:<name>, lift:<name>")
    ev.add_argument("--json", action="store_true")
    ev.set_defaults(func=_cmd_eval)
    dc = sub.add_parser("dualcheck", help="check the S/Z versus scaled P duality in degree N")
    dc.add_argument("n", type=int)
    dc.add_argument("--order", default=None)
    dc.set_defaults(func=_cmd_dualcheck)
    st = sub.add_parser("selftest", help="run the oracle suites")
    st.add_argument("--max-degree", type=int, default=None)
    st.set_defaults(func=_cmd_selftest)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, EvalError) as exc:
        print(f"qpows: error: {exc}", file=sys.stderr)
        return 1
    except RecursionError:
        print("qpows: error: expression nested too deeply", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
