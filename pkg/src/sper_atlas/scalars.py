"""Exact scalars: rationals (``fractions.Fraction``) and the quadratic field Q(sqrt 2).

Coefficients of series are plain rationals. Exponent coordinates are
:class:`QuadExt` values ``a + b*sqrt2`` so that two exponents in one
archimedean class can be Q-linearly independent.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "QuadExt",
    "SQRT2",
    "as_rational",
    "as_quad",
    "scalar_sign",
    "parse_scalar",
    "format_scalar",
    "parse_rational",
    "format_rational",
]


def as_rational(x):
    """Coerce ``x`` to an exact rational; integral values come back as ``int``."""
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return as_rational(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, QuadExt):
        if x.b:
            raise ValueError(f"{x} is not rational")
        return x.a
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def _sgn(x):
    return (x > 0) - (x < 0)


class QuadExt:
    """An element ``a + b*sqrt(2)`` of Q(sqrt 2) with rational ``a`` and ``b``."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = as_rational(a)
        self.b = as_rational(b)

    @classmethod
    def _raw(cls, a, b):
        obj = object.__new__(cls)
        if type(a) is Fraction and a.denominator == 1:
            a = a.numerator
        if type(b) is Fraction and b.denominator == 1:
            b = b.numerator
        obj.a = a
        obj.b = b
        return obj

    @classmethod
    def coerce(cls, x):
        if isinstance(x, QuadExt):
            return x
        return cls(x, 0)

    # -- predicates -----------------------------------------------------

    def is_rational(self):
        return not self.b

    def is_integer(self):
        return not self.b and (type(self.a) is int or self.a.denominator == 1)

    def sign(self):
        a, b = self.a, self.b
        if not b:
            return _sgn(a)
        if not a:
            return _sgn(b)
        sa, sb = _sgn(a), _sgn(b)
        if sa == sb:
            return sa
        # opposite signs: the larger of a^2 and 2 b^2 wins; equality is impossible
        return sa if a * a > 2 * b * b else sb

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QuadExt):
            if isinstance(other, (int, Fraction)):
                return QuadExt._raw(self.a + other, self.b)
            return NotImplemented
        return QuadExt._raw(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt._raw(-self.a, -self.b)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, QuadExt):
            if isinstance(other, (int, Fraction)):
                return QuadExt._raw(self.a - other, self.b)
            return NotImplemented
        return QuadExt._raw(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QuadExt):
            if isinstance(other, (int, Fraction)):
                return QuadExt._raw(self.a * other, self.b * other)
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        if not b and not d:
            return QuadExt._raw(a * c, 0)
        return QuadExt._raw(a * c + 2 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self):
        return QuadExt._raw(self.a, -self.b)

    def norm(self):
        """Field norm ``a^2 - 2 b^2`` (a rational, zero only for zero)."""
        return self.a * self.a - 2 * self.b * self.b

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(sqrt2)")
        if not self.b:
            return QuadExt._raw(Fraction(1) / self.a, 0)
        n = Fraction(self.norm())
        return QuadExt._raw(self.a / n, -self.b / n)

    def __truediv__(self, other):
        if not isinstance(other, QuadExt):
            if isinstance(other, (int, Fraction)):
                if not other:
                    raise ZeroDivisionError("division by zero")
                return QuadExt._raw(Fraction(self.a) / other, Fraction(self.b) / other)
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QuadExt.coerce(other) * self.inverse()

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __floor__(self):
        if not self.b:
            return math.floor(self.a)
        # float estimate, then correct exactly
        k = math.floor(float(self.a) + float(self.b) * math.sqrt(2))
        while (self - k).sign() < 0:
            k -= 1
        while (self - (k + 1)).sign() >= 0:
            k += 1
        return k

    def __ceil__(self):
        return -math.floor(-self)

    # -- comparison -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b))

    def _cmp(self, other):
        if not isinstance(other, (QuadExt, int, Fraction)):
            return NotImplemented
        return (self - other).sign()

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(2)

    def __repr__(self):
        return f"QuadExt({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


SQRT2 = QuadExt(0, 1)


def as_quad(x):
    if isinstance(x, QuadExt):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    return QuadExt(x, 0)


def scalar_sign(x):
    """Exact sign of a rational or a ``QuadExt`` as an int in {-1, 0, 1}."""
    if isinstance(x, QuadExt):
        return x.sign()
    return _sgn(x)


# -- string forms -------------------------------------------------------

_RAT = r"[+-]?\d+(?:/\d+)?"
_RAT_RE = re.compile(rf"^\s*({_RAT})\s*$")
# "a", "a+b*sqrt2", "b*sqrt2", "sqrt2", "-sqrt2", "a-sqrt2"
_QUAD_RE = re.compile(
    rf"^\s*(?:(?P<a>{_RAT})(?=\s*(?:[+-]|$)))?\s*"
    rf"(?:(?P<bs>[+-])?\s*(?:(?P<b>\d+(?:/\d+)?)\s*\*\s*)?sqrt2)?\s*$"
)


def parse_rational(text):
    m = _RAT_RE.match(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    return as_rational(Fraction(m.group(1)))


def parse_scalar(text):
    """Parse ``"p/q"`` or ``"p/q+r/s*sqrt2"`` (and the obvious shorthands)."""
    if not isinstance(text, str):
        return as_quad(text)
    m = _QUAD_RE.match(text)
    if not m or not text.strip():
        raise ValueError(f"not a scalar literal: {text!r}")
    a = Fraction(m.group("a")) if m.group("a") else Fraction(0)
    if "sqrt2" in text:
        b = Fraction(m.group("b")) if m.group("b") else Fraction(1)
        if m.group("bs") == "-":
            b = -b
        elif m.group("bs") is None and m.group("a"):
            raise ValueError(f"missing sign before sqrt2 term: {text!r}")
    else:
        b = Fraction(0)
    return QuadExt(a, b)


def format_rational(x):
    x = as_rational(x)
    if isinstance(x, int):
        return str(x)
    return f"{x.numerator}/{x.denominator}"


def format_scalar(x):
    x = as_quad(x)
    if not x.b:
        return format_rational(x.a)
    b = as_rational(x.b)
    sign = "-" if b < 0 else "+"
    mag = format_rational(abs(b))
    bpart = "sqrt2" if mag == "1" else f"{mag}*sqrt2"
    if not x.a:
        return ("-" if b < 0 else "") + bpart
    return f"{format_rational(x.a)}{sign}{bpart}"
