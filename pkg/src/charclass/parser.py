"""Recursive-descent parser for polynomial expressions.

Grammar (ASCII)::

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' uint)?
    atom   := uint | ident | '(' expr ')'

Identifiers match ``[A-Za-z][A-Za-z0-9_]*`` and must be declared ring
variables.  Implicit multiplication is a syntax error.  A unary minus is
allowed before the first term of any expression (including inside
parentheses).  Coefficients reduce mod p on the fly.
"""

from __future__ import annotations

from .errors import PolyParseError
from .ring import Polynomial, PolyRing


class _Token:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind: str, value, pos: int):
        self.kind = kind
        self.value = value
        self.pos = pos


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            tokens.append(_Token("int", int(text[start:i]), start))
            continue
        if ch.isalpha():
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(_Token("ident", text[start:i], start))
            continue
        if ch in "+-*^()":
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        raise PolyParseError(f"unexpected character {ch!r}", i, text)
    tokens.append(_Token("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, tok: _Token):
        raise PolyParseError(message, tok.pos, self.text)

    def parse(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "end":
            self.fail("empty expression", tok)
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            self.fail(f"unexpected {tok.value!r}", tok)
        return value

    def expr(self) -> Polynomial:
        negate = False
        if self.peek().kind == "-":
            self.advance()
            negate = True
        value = self.term()
        if negate:
            value = -value
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            value = value + rhs if op.kind == "+" else value - rhs
        return value

    def term(self) -> Polynomial:
        value = self.factor()
        while self.peek().kind == "*":
            self.advance()
            value = value * self.factor()
        return value

    def factor(self) -> Polynomial:
        value = self.atom()
        if self.peek().kind == "^":
            caret = self.advance()
            tok = self.peek()
            if tok.kind != "int":
                self.fail("expected a non-negative integer exponent after '^'", caret)
            self.advance()
            value = value ** tok.value
        return value

    def atom(self) -> Polynomial:
        tok = self.advance()
        if tok.kind == "int":
            return self.ring.const(tok.value)
        if tok.kind == "ident":
            try:
                j = self.ring.variable_index(tok.value)
            except KeyError:
                self.fail(f"unknown identifier {tok.value!r}", tok)
            return self.ring.var(j)
        if tok.kind == "(":
            value = self.expr()
            closing = self.advance()
            if closing.kind != ")":
                self.fail("expected ')'", closing)
            return value
        if tok.kind == "end":
            self.fail("unexpected end of expression", tok)
        self.fail(f"unexpected {tok.value!r}", tok)


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse an expression into a polynomial of ``ring``.

    Raises :class:`PolyParseError` (with a character position) on malformed
    syntax, unknown identifiers or empty input.
    """
    return _Parser(text, ring).parse()
