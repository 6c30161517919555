"""Recursive-descent parser for rational trig-polynomial expressions.

Grammar: sums and differences of products of powers.  Atoms are integer
or rational literals (p/q), cos(i)/sin(i) aliases for X_i/Y_i, bare
X<i>/Y<i> names, or parenthesized subexpressions.  Exponents are
nonnegative integer literals after ^.  No floating-point literals.
"""

import re
from fractions import Fraction

from . import _kernel as K
from .errors import ParseError

_TOKEN = re.compile(r"\d+|[A-Za-z]+\d*|[()+\-*^/]")


def _tokenize(text):
    tokens = []
    line = 1
    col = 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        m = _TOKEN.match(text, i)
        if m is None:
            raise ParseError("unexpected character %r" % ch, line, col)
        tokens.append((m.group(0), line, col))
        i = m.end()
        col += len(m.group(0))
    tokens.append((None, line, col))
    return tokens


class _Parser:
    def __init__(self, tokens, registry):
        self.tokens = tokens
        self.pos = 0
        self.registry = registry

    def _peek(self):
        return self.tokens[self.pos][0]

    def _next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _fail(self, message):
        _, line, col = self.tokens[self.pos]
        raise ParseError(message, line, col)

    def parse(self):
        value = self._expr()
        if self._peek() is not None:
            self._fail("unexpected %r after expression" % self._peek())
        return value

    def _expr(self):
        value = self._term()
        while self._peek() in ("+", "-"):
            op, _, _ = self._next()
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self):
        value = self._factor()
        while self._peek() == "*":
            self._next()
            value = value * self._factor()
        return value

    def _factor(self):
        if self._peek() == "-":
            self._next()
            return -self._factor()
        if self._peek() == "+":
            self._next()
            return self._factor()
        return self._power()

    def _power(self):
        base = self._atom()
        if self._peek() == "^":
            self._next()
            e = self._integer("exponent")
            if e > K.EXP_LIMIT:
                self._fail("exponent %d too large" % e)
            return base**e
        return base

    def _integer(self, what):
        tok = self._peek()
        if tok is None or not tok.isdigit():
            self._fail("expected %s, found %r" % (what, tok))
        self._next()
        return int(tok)

    def _atom(self):
        tok = self._peek()
        if tok is None:
            self._fail("unexpected end of expression")
        if tok == "(":
            self._next()
            value = self._expr()
            if self._peek() != ")":
                self._fail("expected ')'")
            self._next()
            return value
        if tok.isdigit():
            self._next()
            num = int(tok)
            if self._peek() == "/":
                self._next()
                den = self._integer("denominator")
                if den == 0:
                    self._fail("zero denominator")
                return self.registry.constant(Fraction(num, den))
            return self.registry.constant(num)
        if tok in ("cos", "sin"):
            _, line, col = self._next()
            if self._peek() != "(":
                self._fail("expected '(' after %s" % tok)
            self._next()
            idx = self._integer("point index")
            if self._peek() != ")":
                self._fail("expected ')'")
            self._next()
            return self._var("X" if tok == "cos" else "Y", idx, line, col)
        m = re.fullmatch(r"([XY])(\d+)", tok)
        if m:
            _, line, col = self._next()
            return self._var(m.group(1), int(m.group(2)), line, col)
        self._fail("unexpected %r" % tok)

    def _var(self, kind, idx, line, col):
        if not 1 <= idx <= self.registry.n:
            raise ParseError(
                "point index %d out of range 1..%d" % (idx, self.registry.n), line, col
            )
        return self.registry.var(kind, idx)


def parse_expression(text, registry):
    """Parse text into an MPoly over the X/Y variables of registry."""
    return _Parser(_tokenize(text), registry).parse()
