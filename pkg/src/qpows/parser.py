"""Recursive-descent parser for basis expressions.

Grammar::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := "-" unary | primary
    primary := NUMBER | atom | NAME "(" args ")" | "(" expr ")"
    atom    := BASIS ["<" ORDER ">"] (COMPOSITION | SETCOMP) | "G" "(" ints ")"

Compositions are written ``[2,1,2]``; set compositions ``{5|1,3|2|4}``, or
``{5|13|2|4}`` when every element is a single digit. Set partitions use the
same braces and may separate blocks with ``/``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

COMPOSITION_BASES = {"M", "F", "E", "P", "Pt", "S", "Z", "p", "m"}
SET_BASES = {"Mn", "Pn", "ncm", "ncp"}
FUNCTIONS = {
    "convert", "coproduct", "antipode", "project", "star", "omega", "psi",
    "dualcheck", "orbitsum", "cmax", "tmin", "height", "sdr", "rhoc", "rhot",
    "algcomp", "coalgcomp", "G",
}


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"syntax error at position {pos}: {message}")
        self.pos = pos


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Atom:
    basis: str
    index: tuple
    order: str | None = None


@dataclass(frozen=True)
class Name:
    """A bare basis name, used as the target of ``convert``."""

    name: str


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class IndexLit:
    """A bare index literal passed to a function such as ``cmax``."""

    index: tuple
    kind: str  # "composition" or "set"


Node = Union[Num, Atom, Name, Call, BinOp, Neg, IndexLit]

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_]*)|(?P<comp>\[[^\]]*\])"
    r"|(?P<set>\{[^}]*\})|(?P<order><[^>]*>)|(?P<op>[-+*/(),]))"
)


def _tokenize(text: str) -> list:
    tokens, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse_composition(body: str, pos: int = 0) -> tuple:
    inner = body.strip()[1:-1].strip()
    if not inner:
        return ()
    try:
        parts = tuple(int(p) for p in inner.split(","))
    except ValueError:
        raise ParseError(f"bad composition {body}", pos) from None
    if any(p < 1 for p in parts):
        raise ParseError(f"composition parts must be positive in {body}", pos)
    return parts


def parse_set_composition(body: str, pos: int = 0) -> tuple:
    inner = body.strip()[1:-1].strip()
    if not inner:
        return ()
    blocks = re.split(r"[|/]", inner)
    compressed = "," not in inner
    out = []
    for b in blocks:
        b = b.strip()
        if not b:
            raise ParseError(f"empty block in {body}", pos)
        items = list(b) if compressed else b.split(",")
        try:
            out.append(tuple(int(x) for x in items))
        except ValueError:
            raise ParseError(f"bad block {b!r} in {body}", pos) from None
    return tuple(out)


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want!r}, found {got!r}", tok[2])
        self.i += 1
        return tok

    def at(self, value) -> bool:
        tok = self.tokens[self.i]
        return tok[0] == "op" and tok[1] == value

    def parse(self) -> Node:
        node = self.expr()
        if self.peek()[0] != "end":
            tok = self.peek()
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.at("*") or self.at("/"):
            op = self.take()[1]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Node:
        if self.at("-"):
            self.take()
            return Neg(self.unary())
        if self.at("+"):
            self.take()
            return self.unary()
        return self.primary()

    def primary(self) -> Node:
        kind, value, pos = self.peek()
        if kind == "num":
            self.take()
            return Num(Fraction(int(value)))
        if kind == "comp":
            self.take()
            return IndexLit(parse_composition(value, pos), "composition")
        if kind == "set":
            self.take()
            return IndexLit(parse_set_composition(value, pos), "set")
        if kind == "op" and value == "(":
            self.take()
            node = self.expr()
            self.take("op", ")")
            return node
        if kind == "name":
            return self.named()
        raise ParseError(f"unexpected {value or 'end of input'!r}", pos)

    def named(self) -> Node:
        _, name, pos = self.take("name")
        order = None
        if self.peek()[0] == "order":
            order = self.take()[1][1:-1].strip()
        kind, value, ipos = self.peek()
        if name in COMPOSITION_BASES and kind == "comp":
            self.take()
            return Atom(name, parse_composition(value, ipos), order)
        if name in SET_BASES and kind == "set":
            self.take()
            return Atom(name, parse_set_composition(value, ipos), order)
        if order is not None:
            raise ParseError(f"basis {name} needs an index after its order", ipos)
        if name == "G" and self.at("("):
            self.take()
            perm = []
            if not self.at(")"):
                perm.append(int(self.take("num")[1]))
                while self.at(","):
                    self.take()
                    perm.append(int(self.take("num")[1]))
            self.take("op", ")")
            return Atom("G", tuple(perm))
        if name in FUNCTIONS and self.at("("):
            self.take()
            args = []
            if not self.at(")"):
                args.append(self.expr())
                while self.at(","):
                    self.take()
                    args.append(self.expr())
            self.take("op", ")")
            return Call(name, tuple(args))
        if name in COMPOSITION_BASES | SET_BASES:
            return Name(name)
        raise ParseError(f"unknown name {name!r}", pos)


def parse(text: str) -> Node:
    return _Parser(text).parse()
