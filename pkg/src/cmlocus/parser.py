"""Parser for polynomial expressions.

Grammar (whitespace between tokens is ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := INT | VARIABLE | '(' expr ')'

``/`` only accepts a nonzero constant divisor, which is exactly what rational
literals like ``3/2`` need; dividing by anything else is an error.  Errors
carry the 0-based offset of the offending token.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .polynomials import Polynomial
from .rings import PolyRing

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))"
)


def tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            # Only whitespace may remain unmatched.
            rest = text[pos:]
            if rest.strip():
                bad = pos + (len(rest) - len(rest.lstrip()))
                raise ParseError(f"unexpected character {text[bad]!r}", position=bad)
            break
        if m.lastgroup == "int":
            tokens.append(("int", m.group("int"), m.start("int")))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        self.i += 1

    def expect_op(self, symbol):
        kind, value, pos = self.tok
        if kind != "op" or value != symbol:
            raise ParseError(f"expected {symbol!r}", position=pos)
        self.advance()

    def at_op(self, *symbols) -> bool:
        kind, value, _ = self.tok
        return kind == "op" and value in symbols

    def parse(self) -> Polynomial:
        result = self.expr()
        kind, value, pos = self.tok
        if kind != "end":
            raise ParseError(f"unexpected {value!r}", position=pos)
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while self.at_op("+", "-"):
            op = self.tok[1]
            self.advance()
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.unary()
        while self.at_op("*", "/"):
            op, pos = self.tok[1], self.tok[2]
            self.advance()
            rhs = self.unary()
            if op == "*":
                result = result * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise ParseError(
                        "division is only allowed by a nonzero constant",
                        position=pos,
                    )
                result = result.scale(self.ring.field.inv(rhs.constant_coeff()))
        return result

    def unary(self) -> Polynomial:
        if self.at_op("-"):
            self.advance()
            return -self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.at_op("^"):
            self.advance()
            kind, value, pos = self.tok
            if kind == "op" and value == "-":
                raise ParseError("malformed exponent: must be non-negative", position=pos)
            if kind != "int":
                raise ParseError("malformed exponent: expected an integer", position=pos)
            self.advance()
            return base ** int(value)
        return base

    def atom(self) -> Polynomial:
        kind, value, pos = self.tok
        if kind == "int":
            self.advance()
            return Polynomial.constant(self.ring, self.ring.field.from_int(int(value)))
        if kind == "name":
            if value not in self.ring.variables:
                raise ParseError(f"unknown variable {value!r}", position=pos)
            self.advance()
            return Polynomial.variable(self.ring, value)
        if kind == "op" and value == "(":
            self.advance()
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(
            f"expected a number, variable, or '(', got {value!r}" if value
            else "unexpected end of input",
            position=pos,
        )


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse an expression into a canonical polynomial over ``ring``."""
    return _Parser(text, ring).parse()
