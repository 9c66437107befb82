"""Polynomial expressions like ``x1^2*x3 - 7/2`` parsed by precedence climbing.

Grammar: ``^`` binds tightest (right-associative, non-negative integer
exponent), then ``*``, then binary ``+``/``-`` (left-associative).  Unary
minus applies to the following power expression.  Variables are ``x<k>``
or ``y<k>`` with ``1 <= k <= n``; one expression may not mix the two.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .points import Polynomial

__all__ = ["parse_polynomial", "tokenize"]

_TOKEN = re.compile(r"\s*(?:(\d+)(?:/(\d+))?|([xy])(\d+)|(\*\*|[-+*^()]))")

_BINARY = {"+": 1, "-": 1, "*": 2, "^": 3}
_MAX_EXPONENT = 1000


def tokenize(src):
    """List of ``(kind, value, position)``; kinds are num, var, op, end."""
    tokens = []
    pos = 0
    src = src.rstrip()
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m:
            bad = len(src) - len(src[pos:].lstrip()) if src[pos].isspace() else pos
            raise ParseError(f"unexpected character {src[bad]!r}", bad)
        start = m.start() + len(m.group(0)) - len(m.group(0).lstrip())
        if m.group(1) is not None:
            den = int(m.group(2)) if m.group(2) is not None else 1
            if den == 0:
                raise ParseError("zero denominator", start)
            tokens.append(("num", Fraction(int(m.group(1)), den), start))
        elif m.group(3) is not None:
            tokens.append(("var", (m.group(3), int(m.group(4))), start))
        else:
            op = "^" if m.group(5) == "**" else m.group(5)
            tokens.append(("op", op, start))
        pos = m.end()
    tokens.append(("end", None, len(src)))
    return tokens


class _Parser:
    def __init__(self, src, n):
        self.tokens = tokenize(src)
        self.i = 0
        self.n = n
        self.letter = None

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expression(self, min_prec=1):
        lhs = self.unary()
        while True:
            kind, op, pos = self.peek()
            if kind != "op" or op not in _BINARY or _BINARY[op] < min_prec:
                return lhs
            self.take()
            prec = _BINARY[op]
            if op == "^":
                lhs = lhs ** self.exponent(pos)
                continue
            rhs = self.expression(prec + 1)
            if op == "+":
                lhs = lhs + rhs
            elif op == "-":
                lhs = lhs - rhs
            else:
                lhs = lhs * rhs

    def exponent(self, op_pos):
        kind, val, pos = self.peek()
        if kind == "op" and val == "-":
            raise ParseError("negative exponent", pos)
        if kind == "op" and val == "(":
            # allow x^(2) but the inside must still be a plain integer
            self.take()
            k = self.exponent(pos)
            kind2, val2, pos2 = self.take()
            if (kind2, val2) != ("op", ")"):
                raise ParseError("expected ')'", pos2)
            return k
        if kind != "num":
            raise ParseError("exponent must be a non-negative integer", pos)
        if val.denominator != 1:
            raise ParseError("exponent must be a non-negative integer", pos)
        self.take()
        k = int(val)
        # right associativity: a^b^c = a^(b^c)
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            _, _, p = self.take()
            e = self.exponent(p)
            if k > 1 and e > 10:
                raise ParseError("exponent too large", pos)
            k = k ** e
        if k > _MAX_EXPONENT:
            raise ParseError("exponent too large", pos)
        return k

    def unary(self):
        kind, val, pos = self.peek()
        if kind == "op" and val in ("+", "-"):
            self.take()
            operand = self.expression(_BINARY["*"])
            return -operand if val == "-" else operand
        return self.atom()

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return Polynomial.constant(val, self.n)
        if kind == "var":
            letter, k = val
            if self.letter is None:
                self.letter = letter
            elif letter != self.letter:
                raise ParseError(f"mixed variable names {self.letter} and {letter}", pos)
            if not 1 <= k <= self.n:
                raise ParseError(f"variable {letter}{k} outside {letter}1..{letter}{self.n}", pos)
            return Polynomial.variable(k, self.n)
        if kind == "op" and val == "(":
            inner = self.expression()
            k2, v2, p2 = self.take()
            if (k2, v2) != ("op", ")"):
                raise ParseError("expected ')'", p2)
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {val!r}", pos)


def parse_polynomial(src, n):
    """Parse ``src`` into a :class:`~sper_atlas.points.Polynomial` in ``n`` variables.

    >>> parse_polynomial("x1^2*x3 - 7/2", 3).terms == {(2, 0, 1): 1, (0, 0, 0): Fraction(-7, 2)}
    True
    """
    if n < 1:
        raise ValueError("n must be positive")
    p = _Parser(src, n)
    result = p.expression()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {val!r}", pos)
    return result
