"""Read-once polynomials over subject variables.

A polynomial is built from variables with ``+`` (conflict) and
juxtaposition or ``*`` (alliance). This module parses and prints them,
stratifies them into a tree of sub-polynomials and folds that tree into the
Boolean function used by every subject's decision equation.

Canonical form: nested sums/products are flattened, every sum/product has
at least two children, sum terms are sorted by their printed text and
product factors list single variables first, then compound factors, each
group sorted by printed text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Sequence, Union

from .boolfunc import BooleanFunction

SHORT_NAME = re.compile(r"[A-Za-z][0-9]*\Z")
RESERVED = set("+*(){}[],")


class PolynomialSyntaxError(ValueError):
    """Malformed polynomial text. ``position`` is the 0-based character offset."""

    def __init__(self, message: str, position: int | None = None) -> None:
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
        self.position = position


class DuplicateVariable(ValueError):
    """A variable occurs more than once in a polynomial."""


# -- AST -------------------------------------------------------------------


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Sum:
    children: tuple[Polynomial, ...]

    def __str__(self) -> str:
        return "+".join(str(c) for c in self.children)


@dataclass(frozen=True)
class Product:
    children: tuple[Polynomial, ...]

    def __str__(self) -> str:
        parts = [f"({c})" if isinstance(c, Sum) else str(c) for c in self.children]
        leaves = [c.name for c in self.children if isinstance(c, Var)]
        nested = [v for c in self.children if not isinstance(c, Var) for v in variables(c)]
        sep = "" if all(SHORT_NAME.match(v) for v in leaves + nested) else "*"
        return sep.join(parts)


Polynomial = Union[Var, Sum, Product]


def variables(p: Polynomial) -> list[str]:
    """Variable names in printed order (duplicates kept)."""
    if isinstance(p, Var):
        return [p.name]
    return [v for c in p.children for v in variables(c)]


def _product_key(p: Polynomial) -> tuple[int, str]:
    return (0 if isinstance(p, Var) else 1, str(p))


def make_sum(children: Iterable[Polynomial]) -> Polynomial:
    flat: list[Polynomial] = []
    for c in children:
        flat.extend(c.children if isinstance(c, Sum) else (c,))
    if not flat:
        raise ValueError("empty sum")
    if len(flat) == 1:
        return flat[0]
    return Sum(tuple(sorted(flat, key=str)))


def make_product(children: Iterable[Polynomial]) -> Polynomial:
    flat: list[Polynomial] = []
    for c in children:
        flat.extend(c.children if isinstance(c, Product) else (c,))
    if not flat:
        raise ValueError("empty product")
    if len(flat) == 1:
        return flat[0]
    return Product(tuple(sorted(flat, key=_product_key)))


def normalize(p: Polynomial) -> Polynomial:
    """Canonical form of an arbitrary AST."""
    if isinstance(p, Var):
        return p
    children = [normalize(c) for c in p.children]
    return make_sum(children) if isinstance(p, Sum) else make_product(children)


def check_read_once(p: Polynomial) -> None:
    seen = set()
    for v in variables(p):
        if v in seen:
            raise DuplicateVariable(f"variable {v!r} occurs more than once")
        seen.add(v)


def to_function(p: Polynomial) -> BooleanFunction:
    """The polynomial itself as a Boolean function (sum = or, product = and)."""
    if isinstance(p, Var):
        return BooleanFunction.variable(p.name)
    parts = [to_function(c) for c in p.children]
    if isinstance(p, Sum):
        return reduce(lambda x, y: x | y, parts)
    return reduce(lambda x, y: x & y, parts)


# -- parsing ---------------------------------------------------------------


def _tokenize(text: str, names: Sequence[str] | None) -> list[tuple[str, str, int]]:
    by_length = sorted(names or (), key=len, reverse=True)
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+*()[]":
            tokens.append(("op", ch, i))
            i += 1
            continue
        if by_length:
            for name in by_length:
                if text.startswith(name, i):
                    tokens.append(("id", name, i))
                    i += len(name)
                    break
            else:
                raise PolynomialSyntaxError(f"unknown subject near {text[i:i + 8]!r}", i)
            continue
        m = re.compile(r"[A-Za-z][0-9]*").match(text, i)
        if not m:
            raise PolynomialSyntaxError(f"unexpected character {ch!r}", i)
        tokens.append(("id", m.group(), i))
        i = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, tokens: list[tuple[str, str, int]]) -> None:
        self.text = text
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise PolynomialSyntaxError("unexpected end of input", len(self.text))
        self.pos += 1
        return tok

    def parse_sum(self) -> Polynomial:
        terms = [self.parse_product()]
        while (tok := self.peek()) is not None and tok[1] == "+":
            self.take()
            terms.append(self.parse_product())
        return make_sum(terms)

    def parse_product(self) -> Polynomial:
        factors = [self.parse_factor()]
        while (tok := self.peek()) is not None:
            if tok[1] == "*":
                self.take()
            elif not (tok[0] == "id" or tok[1] in "(["):
                break
            factors.append(self.parse_factor())
        return make_product(factors)

    def parse_factor(self) -> Polynomial:
        kind, value, at = self.take()
        if kind == "id":
            return Var(value)
        if value in "([":
            inner = self.parse_sum()
            close = ")" if value == "(" else "]"
            tok = self.peek()
            if tok is None:
                raise PolynomialSyntaxError(f"missing {close!r}", len(self.text))
            if tok[1] != close:
                raise PolynomialSyntaxError(f"expected {close!r}, found {tok[1]!r}", tok[2])
            self.take()
            return inner
        raise PolynomialSyntaxError(f"unexpected {value!r}", at)


def parse(text: str, names: Sequence[str] | None = None) -> Polynomial:
    """Parse polynomial text into canonical form.

    Without ``names`` a variable is one letter optionally followed by digits,
    so ``ab`` means ``a*b``. With ``names`` the longest matching subject name
    is taken at each position, which allows multi-letter subject ids.
    Round and square brackets are interchangeable.
    """
    if not text or not text.strip():
        raise PolynomialSyntaxError("empty polynomial", 0)
    tokens = _tokenize(text, names)
    parser = _Parser(text, tokens)
    p = parser.parse_sum()
    if parser.pos != len(tokens):
        _, value, at = tokens[parser.pos]
        raise PolynomialSyntaxError(f"unexpected {value!r}", at)
    check_read_once(p)
    return p


# -- stratification and folding -------------------------------------------


@dataclass(frozen=True)
class PSTNode:
    """Node of a polynomial stratification tree."""

    poly: Polynomial
    connective: str  # "sum", "product" or "leaf"
    children: tuple[PSTNode, ...] = ()

    def __iter__(self) -> Iterator[PSTNode]:
        """Pre-order walk."""
        yield self
        for c in self.children:
            yield from c

    @property
    def depth(self) -> int:
        return 1 + max((c.depth for c in self.children), default=0)

    def levels(self) -> list[list[Polynomial]]:
        out: list[list[Polynomial]] = []
        frontier = [self]
        while frontier:
            out.append([n.poly for n in frontier])
            frontier = [c for n in frontier for c in n.children]
        return out

    def render(self, indent: int = 0) -> str:
        lines = ["  " * indent + f"[{self.poly}]"]
        lines += [c.render(indent + 1) for c in self.children]
        return "\n".join(lines)


def stratify(p: Polynomial) -> PSTNode:
    if isinstance(p, Var):
        return PSTNode(p, "leaf")
    kind = "sum" if isinstance(p, Sum) else "product"
    return PSTNode(p, kind, tuple(stratify(c) for c in p.children))


def fold(tree: PSTNode | Polynomial) -> BooleanFunction:
    """Fold the diagonal form into a single Boolean function.

    Each node is raised to the combination of its folded children:
    ``fold(node) = poly | ~(fold(c1) op ... op fold(ck))``. The result keeps
    only the variables it really depends on.
    """
    if not isinstance(tree, PSTNode):
        tree = stratify(tree)
    return _fold(tree).reduce()


def _fold(node: PSTNode) -> BooleanFunction:
    if node.connective == "leaf":
        return BooleanFunction.variable(node.poly.name)
    parts = [_fold(c) for c in node.children]
    op = (lambda x, y: x | y) if node.connective == "sum" else (lambda x, y: x & y)
    return to_function(node.poly) | ~reduce(op, parts)


# Symbolic fold used for display. Terms are ("const", bool), ("poly", p),
# ("or", items), ("and", items) or ("not", item).


def _combine(kind: str, items: list[tuple]) -> tuple:
    absorbing, neutral = (True, False) if kind == "or" else (False, True)
    if any(t == ("const", absorbing) for t in items):
        return ("const", absorbing)
    items = [t for t in items if t != ("const", neutral)]
    if not items:
        return ("const", neutral)
    if len(items) == 1:
        return items[0]
    if all(t[0] == "poly" for t in items):
        maker = make_sum if kind == "or" else make_product
        return ("poly", maker(t[1] for t in items))
    return (kind, tuple(items))


def _negate(t: tuple) -> tuple:
    if t[0] == "const":
        return ("const", not t[1])
    if t[0] == "not":
        return t[1]
    return ("not", t)


def _symbolic(node: PSTNode) -> tuple:
    if node.connective == "leaf":
        return ("poly", node.poly)
    kind = "or" if node.connective == "sum" else "and"
    exponent = _combine(kind, [_symbolic(c) for c in node.children])
    if exponent == ("poly", node.poly):
        return ("const", True)  # x + ~x = 1
    return _combine("or", [("poly", node.poly), _negate(exponent)])


def _text(t: tuple, inside: str | None = None) -> str:
    kind = t[0]
    if kind == "const":
        return "1" if t[1] else "0"
    if kind == "poly":
        s = str(t[1])
        if inside == "and" and isinstance(t[1], Sum):
            return f"({s})"
        if inside == "not" and not isinstance(t[1], Var):
            return f"({s})"
        return s
    if kind == "not":
        return "~" + _text(t[1], "not")
    if kind == "or":
        s = " + ".join(_text(x, "or") for x in t[1])
        return f"({s})" if inside in ("and", "not") else s
    return "".join(_text(x, "and") for x in t[1])


def fold_expression(tree: PSTNode | Polynomial) -> str:
    """Folded diagonal form as text, simplified only by constant rules.

    ``a(b+c)`` gives ``a(b+c) + ~a``; homogeneous groups give ``1``.
    """
    if not isinstance(tree, PSTNode):
        tree = stratify(tree)
    return _text(_symbolic(tree))


def diagonal_form(tree: PSTNode | Polynomial) -> str:
    """Text rendering of the diagonal form: ``[poly]^(children)`` nested."""
    if not isinstance(tree, PSTNode):
        tree = stratify(tree)
    if tree.connective == "leaf":
        return f"[{tree.poly}]"
    sep = " + " if tree.connective == "sum" else ""
    inner = sep.join(diagonal_form(c) for c in tree.children)
    return f"[{tree.poly}]^({inner})"
