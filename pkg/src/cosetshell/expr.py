"""Group expressions such as ``Z6 x S3`` or ``(E2^2 x Z3) x D5``.

Atoms: ``Z<n>`` cyclic, ``S<n>`` symmetric, ``A<n>`` alternating,
``D<n>`` dihedral of order ``2n``, ``E<p>^<k>`` elementary abelian.
``x`` is the direct product and associates to the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ExprSyntaxError
from .groups import DEFAULT_MAX_ORDER, Group, builtin_group, direct_product

_KINDS = {"Z": "cyclic", "S": "symmetric", "A": "alternating", "D": "dihedral"}
_TOKEN = re.compile(r"\s*(?:(?P<atom>[ZSAD]\d+|E\d+\^\d+)|(?P<op>[x()]))")


@dataclass(frozen=True)
class Atom:
    text: str

    def render(self, top=True) -> str:
        return self.text


@dataclass(frozen=True)
class Product:
    left: object
    right: object

    def render(self, top=True) -> str:
        right = self.right.render(False)
        if isinstance(self.right, Product):
            right = f"({right})"
        return f"{self.left.render(False)} x {right}"


def _byte_offset(s: str, char_pos: int) -> int:
    return len(s[:char_pos].encode())


def _tokens(s: str):
    pos = 0
    while s[pos:].strip():
        m = _TOKEN.match(s, pos)
        if not m:
            bad = pos + len(s[pos:]) - len(s[pos:].lstrip())
            raise ExprSyntaxError(f"unexpected input {s[bad]!r}", _byte_offset(s, bad))
        yield m.lastgroup, m.group(m.lastgroup), _byte_offset(s, m.start(m.lastgroup))
        pos = m.end()
    yield "end", "", len(s.encode())


def parse(s: str):
    """Parse into an expression tree."""
    if not s.strip():
        raise ExprSyntaxError("empty expression", 0)
    toks = list(_tokens(s))
    i = 0

    def peek():
        return toks[i]

    def take():
        nonlocal i
        t = toks[i]
        i += 1
        return t

    def primary():
        kind, text, off = take()
        if kind == "atom":
            return Atom(text)
        if (kind, text) == ("op", "("):
            node = product()
            kind2, text2, off2 = take()
            if (kind2, text2) != ("op", ")"):
                raise ExprSyntaxError("expected ')'", off2)
            return node
        raise ExprSyntaxError(f"expected a group, got {text or 'end of input'!r}", off)

    def product():
        node = primary()
        while peek()[:2] == ("op", "x"):
            take()
            node = Product(node, primary())
        return node

    tree = product()
    kind, text, off = peek()
    if kind != "end":
        raise ExprSyntaxError(f"unexpected {text!r}", off)
    return tree


def build(tree, max_order=DEFAULT_MAX_ORDER) -> Group:
    if isinstance(tree, Product):
        return direct_product(build(tree.left, max_order), build(tree.right, max_order),
                              max_order=max_order)
    t = tree.text
    if t[0] == "E":
        p, k = t[1:].split("^")
        return builtin_group("elementary", int(k), int(p), max_order=max_order)
    g = builtin_group(_KINDS[t[0]], int(t[1:]), max_order=max_order)
    g.label = t
    return g


def parse_group_expr(s: str, max_order=DEFAULT_MAX_ORDER) -> Group:
    tree = parse(s)
    g = build(tree, max_order)
    g.label = tree.render()
    return g
