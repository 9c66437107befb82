"""Finite-support generalized power series over Q and their quotients.

A :class:`HahnPoly` is a finite sum ``sum c_g t^g`` with exponents ``g`` in
the lex group; a :class:`HahnFraction` is a quotient of two of them.  All
valuations, signs and zero tests are exact; :meth:`HahnFraction.expand`
produces a truncated series only for display.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonIntegerSignedExponent, RankMismatch, ZeroSeries
from .lexgroups import LexVector, archimedean_bound
from .scalars import as_rational, format_rational, format_scalar

__all__ = ["SignData", "HahnPoly", "HahnFraction"]


class SignData:
    """Signs of the basis monomials ``t^(e_i)``, one per lex axis.

    A ``-1`` axis only makes sense on integer exponents (squares must be
    positive), so such axes reject fractional or irrational coordinates.
    """

    __slots__ = ("axis_signs",)

    def __init__(self, axis_signs):
        signs = tuple(int(s) for s in axis_signs)
        if any(s not in (1, -1) for s in signs):
            raise ValueError(f"axis signs must be +1 or -1, got {axis_signs!r}")
        self.axis_signs = signs

    @classmethod
    def positive(cls, m):
        return cls((1,) * m)

    @property
    def m(self):
        return len(self.axis_signs)

    def monomial_sign(self, exponent):
        """Sign of ``t^exponent``."""
        if len(exponent) != len(self.axis_signs):
            raise RankMismatch(f"rank {len(exponent)} vs {len(self.axis_signs)}")
        sign = 1
        for s, c in zip(self.axis_signs, exponent.coords):
            if s == 1:
                continue
            if not c.is_integer():
                raise NonIntegerSignedExponent(
                    f"exponent coordinate {format_scalar(c)} on a negative axis"
                )
            if c.a % 2:
                sign = -sign
        return sign

    def __eq__(self, other):
        return isinstance(other, SignData) and self.axis_signs == other.axis_signs

    def __hash__(self):
        return hash(self.axis_signs)

    def __repr__(self):
        return f"SignData({list(self.axis_signs)})"


class HahnPoly:
    """Finite sum of rational multiples of ``t^g``; the zero polynomial has no terms."""

    __slots__ = ("m", "terms")

    def __init__(self, m, terms=None):
        self.m = m
        self.terms = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                if not isinstance(e, LexVector):
                    e = LexVector(e)
                if len(e) != m:
                    raise RankMismatch(f"exponent rank {len(e)} vs {m}")
                c = as_rational(c)
                s = self.terms.get(e, 0) + c
                if s:
                    self.terms[e] = s
                else:
                    self.terms.pop(e, None)

    @classmethod
    def _raw(cls, m, terms):
        obj = object.__new__(cls)
        obj.m = m
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, m):
        return cls._raw(m, {})

    @classmethod
    def constant(cls, c, m):
        c = as_rational(c)
        return cls._raw(m, {LexVector.zero(m): c} if c else {})

    @classmethod
    def monomial(cls, exponent, coeff=1, m=None):
        if not isinstance(exponent, LexVector):
            exponent = LexVector(exponent)
        coeff = as_rational(coeff)
        return cls._raw(len(exponent), {exponent: coeff} if coeff else {})

    def _check(self, other):
        if self.m != other.m:
            raise RankMismatch(f"rank {self.m} vs {other.m}")

    def _coerce(self, other):
        if isinstance(other, HahnPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return HahnPoly.constant(other, self.m)
        return None

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return HahnPoly._raw(self.m, out)

    __radd__ = __add__

    def __neg__(self):
        return HahnPoly._raw(self.m, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return HahnPoly.zero(self.m)
            return HahnPoly._raw(self.m, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, HahnPoly):
            return NotImplemented
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return HahnPoly._raw(self.m, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a series; use HahnFraction")
        result = HahnPoly.constant(1, self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, exponent):
        """Multiply by ``t^exponent``."""
        return HahnPoly._raw(self.m, {e + exponent: c for e, c in self.terms.items()})

    def valuation(self):
        if not self.terms:
            raise ZeroSeries("valuation of the zero series")
        return min(self.terms)

    def leading_term(self):
        v = self.valuation()
        return v, self.terms[v]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def sign(self, signs):
        v, c = self.leading_term()
        s = 1 if c > 0 else -1
        return s * signs.monomial_sign(v)

    def truncate(self, frontier):
        """Terms with exponent strictly below ``frontier``."""
        return HahnPoly._raw(self.m, {e: c for e, c in self.terms.items() if e < frontier})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda ec: ec[0])

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, HahnPoly) else other
        if not isinstance(other, HahnPoly):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def __repr__(self):
        return f"HahnPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            if e.is_zero():
                parts.append(format_rational(c))
            else:
                mono = f"t^{e}"
                parts.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{format_rational(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


class HahnFraction:
    """Quotient ``num / den`` of finite-support series (``den`` nonzero).

    Monomial denominators are absorbed into the numerator so the common
    case stays a plain series.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = HahnPoly.constant(1, num.m)
        if num.m != den.m:
            raise RankMismatch(f"rank {num.m} vs {den.m}")
        if den.is_zero():
            raise ZeroSeries("zero denominator")
        if num.is_zero():
            den = HahnPoly.constant(1, num.m)
        elif den.is_monomial():
            (e, c), = den.terms.items()
            if not (c == 1 and e.is_zero()):
                num = num.shift(-e) * (Fraction(1) / c)
                den = HahnPoly.constant(1, num.m)
        self.num = num
        self.den = den

    @classmethod
    def constant(cls, c, m):
        return cls(HahnPoly.constant(c, m))

    @classmethod
    def monomial(cls, exponent, coeff=1):
        return cls(HahnPoly.monomial(exponent, coeff))

    @property
    def m(self):
        return self.num.m

    def _coerce(self, other):
        if isinstance(other, HahnFraction):
            if other.m != self.m:
                raise RankMismatch(f"rank {self.m} vs {other.m}")
            return other
        if isinstance(other, HahnPoly):
            return HahnFraction(other)
        if isinstance(other, (int, Fraction)):
            return HahnFraction.constant(other, self.m)
        return None

    def is_zero(self):
        return self.num.is_zero()

    def is_series(self):
        """True when the denominator is 1, i.e. the value is a finite series."""
        return self.den.is_monomial() and self.den.terms.get(LexVector.zero(self.m)) == 1

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return HahnFraction(self.num + other.num, self.den)
        return HahnFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return HahnFraction(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return HahnFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def invert(self):
        if self.num.is_zero():
            raise ZeroSeries("inverse of zero")
        return HahnFraction(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.invert()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.invert()

    def __pow__(self, k):
        if k < 0:
            return self.invert() ** (-k)
        return HahnFraction(self.num ** k, self.den ** k)

    def valuation(self):
        if self.num.is_zero():
            raise ZeroSeries("valuation of zero")
        return self.num.valuation() - self.den.valuation()

    def sign(self, signs):
        if self.num.is_zero():
            return 0
        return self.num.sign(signs) * self.den.sign(signs)

    def expand(self, frontier):
        """Series agreeing with ``self`` at every exponent strictly below ``frontier``.

        Writes the denominator as ``c t^g (1 - r)`` with ``v(r) > 0`` and sums
        the geometric series in ``r`` for as many steps as the frontier needs.
        Raises ``ValueError`` when no finite number of steps suffices (``r``
        infinitesimal relative to the gap to the frontier).
        """
        if self.num.is_zero():
            raise ZeroSeries("expansion of zero")
        g, c = self.den.leading_term()
        unit = HahnPoly.monomial(g, c)
        # den = unit * (1 - r)
        r = HahnPoly.constant(1, self.m) - HahnPoly._raw(
            self.m, {e - g: q / Fraction(c) for e, q in self.den.terms.items()}
        )
        prefix = self.num.shift(-g) * (Fraction(1) / c)
        if not prefix.is_zero() and prefix.valuation() >= frontier:
            return HahnPoly.zero(self.m)
        if r.is_zero():
            return prefix.truncate(frontier)
        gap = frontier - prefix.valuation()
        steps = archimedean_bound(r.valuation(), gap)
        if steps is None:
            raise ValueError("expansion does not reach the frontier in finitely many steps")
        result = HahnPoly.zero(self.m)
        term = prefix.truncate(frontier)
        for _ in range(steps + 1):
            if term.is_zero():
                break
            result = result + term
            term = (term * r).truncate(frontier)
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("HahnFraction is unhashable (equality is cross-multiplication)")

    def __repr__(self):
        return f"HahnFraction({self})"

    def __str__(self):
        if self.is_series():
            return str(self.num)
        return f"({self.num}) / ({self.den})"
