"""Precedence-climbing parser for polynomial expressions.

The grammar is shared by every alphabet in the package::

    sum     := product (('+' | '-') product)*
    product := unary ('*' unary)*
    unary   := ('-' | '+') unary | power
    power   := atom ('^' INT)?
    atom    := INT | NAME | '(' sum ')'

``^`` binds tightest, then unary minus, then ``*``, then ``+``/``-``.
Exponents are decimal literals below ``MAX_EXPONENT``. The parser is
generic over the value type: it only needs ``+``, ``-``, ``*`` and
``**`` on the values returned by the ``constant`` and ``variable``
callbacks.
"""
from __future__ import annotations

import re
from typing import Callable, TypeVar

T = TypeVar("T")

MAX_EXPONENT = 1 << 16

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S)")


class ParseError(ValueError):
    """Raised on malformed input; ``pos`` is the 0-based character offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    for m in _TOKEN.finditer(text):
        pos = m.start()
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), pos))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), pos))
        else:
            ch = m.group(3)
            if ch not in "+-*^()":
                raise ParseError(f"unexpected character {ch!r}", pos)
            tokens.append(("op", ch, pos))
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, constant, variable):
        self.tokens = tokenize(text)
        self.i = 0
        self.constant = constant
        self.variable = variable

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at_op(self, ch):
        kind, val, _ = self.peek()
        return kind == "op" and val == ch

    def parse(self):
        value = self.sum()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {val!r}", pos)
        return value

    def sum(self):
        value = self.product()
        while self.at_op("+") or self.at_op("-"):
            _, op, _ = self.take()
            rhs = self.product()
            value = value + rhs if op == "+" else value - rhs
        return value

    def product(self):
        value = self.unary()
        while self.at_op("*"):
            self.take()
            value = value * self.unary()
        return value

    def unary(self):
        if self.at_op("-"):
            self.take()
            return -self.unary()
        if self.at_op("+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.at_op("^"):
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer literal", pos)
            exp = int(val)
            if exp >= MAX_EXPONENT:
                raise ParseError(f"exponent {exp} overflows (limit {MAX_EXPONENT - 1})", pos)
            base = base ** exp
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return self.constant(int(val))
        if kind == "name":
            return self.variable(val, pos)
        if kind == "op" and val == "(":
            value = self.sum()
            kind, val, pos = self.take()
            if not (kind == "op" and val == ")"):
                raise ParseError("expected ')'", pos)
            return value
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {val!r}", pos)


def parse_expression(
    text: str,
    constant: Callable[[int], T],
    variable: Callable[[str, int], T],
) -> T:
    """Parse ``text`` into a value built from the two callbacks.

    ``variable(name, pos)`` must raise :class:`ParseError` for names outside
    the alphabet.
    """
    return _Parser(text, constant, variable).parse()
