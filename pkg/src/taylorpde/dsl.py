"""A small language for first-order-in-time evolution systems.

One equation per line, `#` starts a comment:

    u' = -11/2 * (1 - u^2)
    v' = u * v_x + d_x^2(v)

Grammar (left-associative, `^` binds tightest, unary minus below `*`):

    system   := equation*
    equation := NAME "'" "=" expr
    expr     := term (("+" | "-") term)*
    term     := factor ("*" factor)*
    factor   := "-" factor | power
    power    := atom ["^" INT]
    atom     := NUMBER ["/" INT]          exact rational literal
              | NAME                      field, or derivative like u_xx
              | "d_x" "^" INT "(" NAME ")"
              | "(" expr ")"

Only spatial derivatives of plain fields are allowed; `u_t` on a
right-hand side is rejected, as is differentiating a subexpression.
Numeric literals are kept as exact rationals until evaluation.  Fields
are ordered by the appearance of their defining equations.
"""

from __future__ import annotations

import re
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

from .errors import (
    DimensionMismatchError,
    DuplicateEquationError,
    ParseError,
    UnknownFieldError,
    UnsupportedDerivativeError,
)
from .series import TimeSeries


@dataclass(frozen=True)
class Const:
    value: Fraction


@dataclass(frozen=True)
class Field:
    index: int


@dataclass(frozen=True)
class Deriv:
    index: int
    order: int


@dataclass(frozen=True)
class Add:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Sub:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Mul:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Const, Field, Deriv, Add, Sub, Mul, Neg, Pow]


@dataclass(frozen=True)
class PdeSystem:
    """Parsed system: field names plus one right-hand side per field."""

    fields: tuple[str, ...]
    equations: tuple[Node, ...]

    def __post_init__(self):
        if len(self.fields) != len(self.equations):
            raise ValueError("one equation per field required")

    @property
    def max_spatial_order(self) -> int:
        return max((_max_deriv(eq) for eq in self.equations), default=0)

    def pretty(self) -> str:
        lines = [
            f"{name}' = {pretty(eq, self.fields)}"
            for name, eq in zip(self.fields, self.equations)
        ]
        return "\n".join(lines)


def _max_deriv(node: Node) -> int:
    if isinstance(node, Deriv):
        return node.order
    if isinstance(node, (Add, Sub, Mul)):
        return max(_max_deriv(node.left), _max_deriv(node.right))
    if isinstance(node, Neg):
        return _max_deriv(node.operand)
    if isinstance(node, Pow):
        return _max_deriv(node.base)
    return 0


class _Token(NamedTuple):
    kind: str  # "name" | "number" | "op"
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(
    r"[A-Za-z][A-Za-z0-9]*(?:_[A-Za-z0-9]+)?"  # name, one optional subscript
    r"|\d+\.\d*|\.\d+|\d+"  # number
    r"|[-+*/^()'=]"  # operator
)


def _tokenize(line: str, lineno: int) -> list[_Token]:
    hash_pos = line.find("#")
    if hash_pos >= 0:
        line = line[:hash_pos]
    tokens = []
    pos = 0
    n = len(line)
    while pos < n:
        if line[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(line, pos)
        if m is None:
            raise ParseError(f"unexpected character {line[pos]!r}", lineno, pos + 1)
        text = m.group(0)
        first = text[0]
        if first.isalpha():
            kind = "name"
        elif first.isdigit() or first == ".":
            kind = "number"
        else:
            kind = "op"
        tokens.append(_Token(kind, text, lineno, pos + 1))
        pos = m.end()
    return tokens


def parse_system(text: str) -> PdeSystem:
    """Parse system source text; raises ParseError subclasses on bad input."""
    equations = []  # (name, rhs tokens, name token)
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = _tokenize(raw, lineno)
        if not tokens:
            continue
        head = tokens[0]
        if head.kind != "name":
            raise ParseError("each equation must start with a field name", lineno, head.col)
        if "_" in head.text:
            raise ParseError("left-hand side must be a bare field name", lineno, head.col)
        if len(tokens) < 2 or tokens[1].text != "'":
            raise ParseError(f"expected \"'\" after field name '{head.text}'", lineno, head.col)
        if len(tokens) < 3 or tokens[2].text != "=":
            raise ParseError("expected '=' after the primed field name", lineno, head.col)
        if head.text in seen:
            raise DuplicateEquationError(
                f"field '{head.text}' already has an equation on line {seen[head.text]}",
                lineno,
                head.col,
            )
        seen[head.text] = lineno
        equations.append((head.text, tokens[3:], head))

    if not equations:
        raise ParseError("no equations found")

    fields = tuple(name for name, _, _ in equations)
    index = {name: i for i, name in enumerate(fields)}
    rhs = []
    for name, tokens, head in equations:
        if not tokens:
            raise ParseError(f"empty right-hand side for '{name}'", head.line, head.col)
        rhs.append(_ExprParser(tokens, index).parse())
    return PdeSystem(fields, tuple(rhs))


class _ExprParser:
    def __init__(self, tokens: list[_Token], fields: dict[str, int]):
        self._toks = tokens
        self._fields = fields
        self._i = 0
        self._line = tokens[0].line

    def parse(self) -> Node:
        node = self._expr()
        tok = self._peek()
        if tok is not None:
            raise ParseError(f"unexpected '{tok.text}'", tok.line, tok.col)
        return node

    def _peek(self, ahead: int = 0) -> _Token | None:
        i = self._i + ahead
        return self._toks[i] if i < len(self._toks) else None

    def _next(self) -> _Token:
        tok = self._peek()
        if tok is None:
            raise ParseError("unexpected end of expression", self._line)
        self._i += 1
        return tok

    def _expr(self) -> Node:
        node = self._term()
        while True:
            tok = self._peek()
            if tok is None or tok.kind != "op" or tok.text not in "+-":
                return node
            self._next()
            right = self._term()
            node = Add(node, right) if tok.text == "+" else Sub(node, right)

    def _term(self) -> Node:
        node = self._factor()
        while True:
            tok = self._peek()
            if tok is None or tok.kind != "op" or tok.text != "*":
                return node
            self._next()
            node = Mul(node, self._factor())

    def _factor(self) -> Node:
        tok = self._peek()
        if tok is not None and tok.kind == "op" and tok.text == "-":
            self._next()
            child = self._factor()
            if isinstance(child, Const):
                return Const(-child.value)
            return Neg(child)
        return self._power()

    def _power(self) -> Node:
        base = self._atom()
        tok = self._peek()
        if tok is None or tok.kind != "op" or tok.text != "^":
            return base
        self._next()
        exp = self._next()
        if exp.kind != "number" or "." in exp.text or int(exp.text) < 1:
            raise ParseError("exponent must be a positive integer", exp.line, exp.col)
        k = int(exp.text)
        return base if k == 1 else Pow(base, k)

    def _atom(self) -> Node:
        tok = self._next()
        if tok.kind == "number":
            return self._number(tok)
        if tok.kind == "name":
            return self._name(tok)
        if tok.text == "(":
            node = self._expr()
            closing = self._next()
            if closing.text != ")":
                raise ParseError(f"expected ')', got '{closing.text}'", closing.line, closing.col)
            return node
        raise ParseError(f"unexpected '{tok.text}'", tok.line, tok.col)

    def _number(self, tok: _Token) -> Node:
        nxt = self._peek()
        if nxt is not None and nxt.kind == "op" and nxt.text == "/":
            if "." in tok.text:
                raise ParseError("rational literal parts must be integers", tok.line, tok.col)
            self._next()
            den = self._next()
            if den.kind != "number" or "." in den.text:
                raise ParseError("rational literal parts must be integers", den.line, den.col)
            if int(den.text) == 0:
                raise ParseError("zero denominator in rational literal", den.line, den.col)
            return Const(Fraction(int(tok.text), int(den.text)))
        # Fraction parses decimal strings exactly.
        return Const(Fraction(tok.text))

    def _name(self, tok: _Token) -> Node:
        text = tok.text
        if text == "d_x":
            t0, t1, t2 = self._peek(0), self._peek(1), self._peek(2)
            if (
                t0 is not None
                and t0.text == "^"
                and t1 is not None
                and t1.kind == "number"
                and t2 is not None
                and t2.text == "("
            ):
                return self._deriv_operator()
            if t0 is not None and t0.text == "(":
                raise ParseError(
                    "write d_x^k(name) with an explicit derivative order",
                    tok.line,
                    tok.col,
                )
        if "_" in text:
            base, suffix = text.split("_", 1)
            if "t" in suffix:
                raise UnsupportedDerivativeError(
                    "time derivatives cannot appear in a right-hand side",
                    tok.line,
                    tok.col,
                )
            if suffix and set(suffix) == {"x"}:
                return Deriv(self._field_index(base, tok), len(suffix))
            raise ParseError(f"unrecognized subscript '_{suffix}'", tok.line, tok.col)
        return Field(self._field_index(text, tok))

    def _deriv_operator(self) -> Node:
        self._next()  # ^
        exp = self._next()
        if "." in exp.text or int(exp.text) < 1:
            raise ParseError("derivative order must be a positive integer", exp.line, exp.col)
        self._next()  # (
        inner = self._next()
        if inner.kind != "name" or "_" in inner.text:
            raise UnsupportedDerivativeError(
                "d_x applies to a single plain field name", inner.line, inner.col
            )
        idx = self._field_index(inner.text, inner)
        closing = self._next()
        if closing.text != ")":
            raise UnsupportedDerivativeError(
                "d_x applies to a single field name, not an expression",
                closing.line,
                closing.col,
            )
        return Deriv(idx, int(exp.text))

    def _field_index(self, name: str, tok: _Token) -> int:
        try:
            return self._fields[name]
        except KeyError:
            raise UnknownFieldError(f"unknown field '{name}'", tok.line, tok.col) from None


def pretty(node: Node, fields: Sequence[str]) -> str:
    """Render a node so that parsing the output rebuilds the same tree."""
    text, _ = _fmt(node, fields)
    return text


# Precedence levels: 1 additive, 2 unary minus, 3 multiplicative, 4 power,
# 5 atom.  A child is parenthesized when its level is below the minimum its
# position requires; right operands require strictly more than the operator.
def _fmt(node: Node, fields: Sequence[str]) -> tuple[str, int]:
    if isinstance(node, Const):
        v = node.value
        text = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return text, 5 if v >= 0 else 2
    if isinstance(node, Field):
        return fields[node.index], 5
    if isinstance(node, Deriv):
        if node.order <= 3:
            return f"{fields[node.index]}_{'x' * node.order}", 5
        return f"d_x^{node.order}({fields[node.index]})", 5
    if isinstance(node, Neg):
        return f"-{_wrap(node.operand, 4, fields)}", 2
    if isinstance(node, Add):
        return f"{_wrap(node.left, 1, fields)} + {_wrap(node.right, 2, fields)}", 1
    if isinstance(node, Sub):
        return f"{_wrap(node.left, 1, fields)} - {_wrap(node.right, 2, fields)}", 1
    if isinstance(node, Mul):
        # A unary-minus child needs no parens beside '*': a leading '-'
        # before a factor reparses into the same tree.
        left = _wrap(node.left, 3, fields, unary_ok=True)
        right = _wrap(node.right, 4, fields, unary_ok=True)
        return f"{left} * {right}", 3
    if isinstance(node, Pow):
        return f"{_wrap(node.base, 5, fields)}^{node.exponent}", 4
    raise TypeError(f"not an expression node: {node!r}")


def _wrap(node: Node, minprec: int, fields: Sequence[str], unary_ok: bool = False) -> str:
    text, prec = _fmt(node, fields)
    if prec >= minprec or (unary_ok and prec == 2):
        return text
    return f"({text})"


def eval_rhs(system: PdeSystem, state: Sequence[TimeSeries], order: int) -> tuple[TimeSeries, ...]:
    """Evaluate every right-hand side on a state vector of series.

    Each result is truncated at exactly `order`; products are cut there
    rather than extended, so the order-j coefficient of the result depends
    only on state coefficients 0..j.
    """
    if len(state) != len(system.fields):
        raise DimensionMismatchError(
            f"system has {len(system.fields)} fields but state has {len(state)} entries"
        )
    if order < 0:
        raise ValueError("order must be nonnegative")
    trunc = [s.truncate(order) for s in state]
    deriv_cache: dict[tuple[int, int], TimeSeries] = {}

    def ev(node: Node) -> TimeSeries:
        if isinstance(node, Const):
            return TimeSeries.constant(float(node.value), order)
        if isinstance(node, Field):
            return trunc[node.index]
        if isinstance(node, Deriv):
            key = (node.index, node.order)
            if key not in deriv_cache:
                deriv_cache[key] = trunc[node.index].dx(node.order)
            return deriv_cache[key]
        if isinstance(node, Add):
            return ev(node.left) + ev(node.right)
        if isinstance(node, Sub):
            return ev(node.left) - ev(node.right)
        if isinstance(node, Mul):
            return ev(node.left).mul(ev(node.right), order)
        if isinstance(node, Neg):
            return -ev(node.operand)
        if isinstance(node, Pow):
            base = ev(node.base)
            out = base
            for _ in range(node.exponent - 1):
                out = out.mul(base, order)
            return out
        raise TypeError(f"not an expression node: {node!r}")

    return tuple(ev(eq) for eq in system.equations)
