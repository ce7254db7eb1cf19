"""Graph expressions such as ``K3[]K4``, ``K1,1,2*K1,2,2`` or ``C3.(E2)``.

Atoms are ``K<n>``, ``K<m1>,<m2>,...`` (complete multipartite), ``P<n>``,
``C<n>``, ``W<n>``, ``F<n>``, ``E<n>`` (edgeless) and ``@path`` (edge-list
file). Binary operators ``[]`` (Cartesian), ``*`` (tensor) and ``.``
(lexicographic) share one precedence level and associate to the left. A file
path runs until whitespace or a bracket, so it swallows dots: write
``(@g.txt).K2`` for a lexicographic product with a file operand.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from . import families
from .errors import ExprParseError
from .graph import Graph
from .io import load_graph
from .products import cartesian, lexicographic, tensor


@dataclass(frozen=True)
class Atom:
    family: str
    params: tuple[int, ...]


@dataclass(frozen=True)
class FileRef:
    path: str


@dataclass(frozen=True)
class Product:
    op: str
    left: GraphExpr
    right: GraphExpr


GraphExpr = Union[Atom, FileRef, Product]

OPERATORS = {"[]": "cartesian", "*": "tensor", ".": "lexicographic"}
_MINIMUM = {"P": 1, "C": 3, "W": 3, "F": 2, "E": 1, "K": 1}
_ATOM = re.compile(r"([KPCWFE])(\d+(?:,\d+)*)")
_PATH = re.compile(r"@([^\s()\[\]*]+)")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None) -> ExprParseError:
        return ExprParseError(message, self.pos if pos is None else pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def parse(self) -> GraphExpr:
        self.skip()
        if self.pos == len(self.text):
            raise self.error("empty expression")
        node = self.expr()
        self.skip()
        if self.pos != len(self.text):
            raise self.error(f"unexpected {self.text[self.pos]!r}")
        return node

    def expr(self) -> GraphExpr:
        node = self.term()
        while True:
            self.skip()
            op = self.operator()
            if op is None:
                return node
            node = Product(OPERATORS[op], node, self.term())

    def operator(self) -> str | None:
        for op in OPERATORS:
            if self.text.startswith(op, self.pos):
                self.pos += len(op)
                return op
        return None

    def term(self) -> GraphExpr:
        self.skip()
        if self.pos == len(self.text):
            raise self.error("expected a graph, found end of input")
        ch = self.text[self.pos]
        if ch == "(":
            start = self.pos
            self.pos += 1
            node = self.expr()
            self.skip()
            if self.pos == len(self.text) or self.text[self.pos] != ")":
                raise self.error("unbalanced parenthesis", start)
            self.pos += 1
            return node
        if ch == "@":
            m = _PATH.match(self.text, self.pos)
            if not m:
                raise self.error("expected a file path after '@'")
            self.pos = m.end()
            return FileRef(m.group(1))
        m = _ATOM.match(self.text, self.pos)
        if not m:
            raise self.error(f"unknown graph family at {self.text[self.pos:self.pos + 8]!r}")
        family = m.group(1)
        params = tuple(int(p) for p in m.group(2).split(","))
        self.check_atom(family, params, self.pos)
        self.pos = m.end()
        return Atom(family, params)

    def check_atom(self, family: str, params: tuple[int, ...], pos: int) -> None:
        if len(params) > 1 and family != "K":
            raise self.error(f"{family} takes a single size", pos)
        low = _MINIMUM[family]
        if any(p < low for p in params):
            raise self.error(f"{family}{','.join(map(str, params))}: sizes must be >= {low}", pos)


def parse_graph_expr(text: str) -> GraphExpr:
    return _Parser(text).parse()


_BUILDERS = {
    "P": families.path, "C": families.cycle, "W": families.wheel,
    "F": families.fan, "E": families.empty,
}
_PRODUCTS = {"cartesian": cartesian, "tensor": tensor, "lexicographic": lexicographic}


def evaluate(node: GraphExpr) -> Graph:
    if isinstance(node, Atom):
        if node.family == "K":
            if len(node.params) == 1:
                return families.complete(node.params[0])
            return families.complete_multipartite(node.params)
        return _BUILDERS[node.family](node.params[0])
    if isinstance(node, FileRef):
        return load_graph(node.path)
    return _PRODUCTS[node.op](evaluate(node.left), evaluate(node.right))


def build_graph(text: str) -> Graph:
    return evaluate(parse_graph_expr(text))
