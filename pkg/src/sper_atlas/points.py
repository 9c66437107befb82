"""Points of the real spectrum of ``Q[x_1..x_n]`` given as semi-curvettes.

A :class:`Point` sends each ``x_j`` to a quotient of finite-support series
and carries sign data for the lex axes; the order on the image field is
the induced one.  Coordinates are indexed from 1 throughout, matching the
usual ``x_1, ..., x_n`` notation; ``images[j - 1]`` is the image of ``x_j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .errors import RankMismatch
from .hahn import HahnFraction, HahnPoly, SignData
from .lexgroups import INF, ConvexSubgroup, LexVector, convex_hull, project_mod
from .scalars import as_rational, format_rational

__all__ = [
    "Polynomial",
    "Point",
    "Classification",
    "eval_poly",
    "eval_fraction",
    "in_support",
    "poly_sign",
    "fine_valuation",
    "delta_subgroup",
    "nu_delta",
    "classify",
    "is_finite_point",
    "point_equal",
]


class Polynomial:
    """Sparse polynomial in ``n`` variables with rational coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                e = tuple(int(k) for k in e)
                if len(e) != n or any(k < 0 for k in e):
                    raise ValueError(f"bad exponent tuple {e} for n={n}")
                s = self.terms.get(e, 0) + as_rational(c)
                if s:
                    self.terms[e] = s
                else:
                    self.terms.pop(e, None)

    @classmethod
    def _raw(cls, n, terms):
        obj = object.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, c, n):
        c = as_rational(c)
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def variable(cls, j, n):
        """``x_j`` (1-based)."""
        if not 1 <= j <= n:
            raise ValueError(f"variable index {j} outside 1..{n}")
        e = [0] * n
        e[j - 1] = 1
        return cls._raw(n, {tuple(e): 1})

    @classmethod
    def monomial(cls, exponents, coeff=1):
        return cls(len(exponents), {tuple(exponents): coeff})

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.n != self.n:
                raise RankMismatch(f"{self.n} vs {other.n} variables")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.n)
        return None

    def is_zero(self):
        return not self.terms

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
        return Polynomial._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.n, {e: -c for e, c in self.terms.items()})

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
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Polynomial._raw(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial exponents must be non-negative integers")
        result = Polynomial.constant(1, self.n)
        for _ in range(k):
            result = result * self
        return result

    def degrees(self):
        """Highest exponent of each variable."""
        degs = [0] * self.n
        for e in self.terms:
            for i, k in enumerate(e):
                if k > degs[i]:
                    degs[i] = k
        return degs

    def substitute_monomials(self, matrix):
        """Compose with ``x_i -> prod_j x'_j^matrix[i][j]`` (non-negative entries)."""
        n2 = len(matrix[0]) if matrix else 0
        out = {}
        for e, c in self.terms.items():
            new = [sum(e[i] * matrix[i][j] for i in range(self.n)) for j in range(n2)]
            if any(k < 0 for k in new):
                raise ValueError("substitution produces a negative exponent")
            new = tuple(new)
            s = out.get(new, 0) + c
            if s:
                out[new] = s
            else:
                out.pop(new, None)
        return Polynomial._raw(n2, out)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def to_text(self, var="x"):
        """Canonical text form, parseable by :func:`sper_atlas.parsing.parse_polynomial`."""
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-k for k in e))):
            c = self.terms[e]
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(f"{var}{i + 1}")
                elif k > 1:
                    factors.append(f"{var}{i + 1}^{k}")
            mag = format_rational(abs(c))
            if not factors:
                body = mag
            elif mag == "1":
                body = "*".join(factors)
            else:
                body = mag + "*" + "*".join(factors)
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Polynomial({self.to_text()!r}, n={self.n})"

    __str__ = to_text


@dataclass(frozen=True, eq=False)
class Point:
    """A semi-curvette: images of ``x_1..x_n`` plus sign data on the lex axes."""

    images: tuple
    signs: SignData
    exponent_field: str = "Q"

    def __post_init__(self):
        images = tuple(
            im if isinstance(im, HahnFraction) else HahnFraction(im) for im in self.images
        )
        object.__setattr__(self, "images", images)
        if not images:
            raise ValueError("a point needs at least one coordinate")
        m = self.signs.m
        for im in images:
            if im.m != m:
                raise RankMismatch(f"image of rank {im.m} with sign data of rank {m}")
        if self.exponent_field not in ("Q", "Qsqrt2"):
            raise ValueError(f"unknown exponent field {self.exponent_field!r}")
        if self.exponent_field == "Q":
            for im in images:
                for poly in (im.num, im.den):
                    if not all(e.is_rational() for e in poly.terms):
                        raise ValueError("irrational exponent in a point over field Q")

    @property
    def n(self):
        return len(self.images)

    @property
    def m(self):
        return self.signs.m

    def image(self, j):
        return self.images[j - 1]

    @cached_property
    def support_coordinates(self):
        return frozenset(j for j in range(1, self.n + 1) if self.image(j).is_zero())

    @cached_property
    def coordinate_values(self):
        """Fine valuation of each coordinate image (``INF`` on the support)."""
        return tuple(INF if im.is_zero() else im.valuation() for im in self.images)

    @cached_property
    def delta(self):
        return delta_subgroup(self)

    @cached_property
    def coordinate_nu(self):
        return tuple(project_mod(v, self.delta) for v in self.coordinate_values)

    @cached_property
    def classification(self):
        return classify(self)

    def __repr__(self):
        ims = ", ".join(str(im) for im in self.images)
        return f"Point(n={self.n}, m={self.m}, images=[{ims}], signs={list(self.signs.axis_signs)})"


def _monomial_power(cache, base, k):
    key = (id(base), k)
    if key not in cache:
        cache[key] = base ** k
    return cache[key]


def eval_poly(point, f):
    """Image of ``f`` under the semi-curvette, as an exact fraction of series."""
    if f.n != point.n:
        raise RankMismatch(f"polynomial in {f.n} variables at a point with n={point.n}")
    m = point.m
    if f.is_zero():
        return HahnFraction(HahnPoly.zero(m))
    degs = f.degrees()
    nums = [im.num for im in point.images]
    dens = [im.den for im in point.images]
    cache = {}
    common = HahnPoly.constant(1, m)
    for j, d in enumerate(degs):
        if d and not point.images[j].is_series():
            common = common * _monomial_power(cache, dens[j], d)
    total = HahnPoly.zero(m)
    for e, c in f.terms.items():
        term = HahnPoly.constant(c, m)
        for j, k in enumerate(e):
            if k:
                term = term * _monomial_power(cache, nums[j], k)
            if degs[j] - k and not point.images[j].is_series():
                term = term * _monomial_power(cache, dens[j], degs[j] - k)
        total = total + term
    return HahnFraction(total, common)


def eval_fraction(point, num, den):
    """Image of the rational function ``num / den``; ``den`` must not vanish."""
    return eval_poly(point, num) / eval_poly(point, den)


def in_support(point, f):
    return eval_poly(point, f).is_zero()


def poly_sign(point, f):
    """Sign of ``f`` in the order of the point (0 exactly on the support)."""
    return eval_poly(point, f).sign(point.signs)


def _value(frac):
    return INF if frac.is_zero() else frac.valuation()


def fine_valuation(point, f):
    """Full t-adic value of the image of ``f``; ``INF`` on the support."""
    if isinstance(f, HahnFraction):
        return _value(f)
    return _value(eval_poly(point, f))


def delta_subgroup(point):
    """Convex hull of the negative fine values of the coordinates.

    Quotienting by it turns the fine valuation into the valuation of the
    ring of elements bounded by polynomials in the coordinates.
    """
    negatives = [v for v in point.coordinate_values if v is not INF and v.sign() < 0]
    return convex_hull(negatives, point.m)


def nu_delta(point, f):
    """Value of ``f`` for the valuation of the point (quotient of the fine value)."""
    return project_mod(fine_valuation(point, f), point.delta)


@dataclass(frozen=True)
class Classification:
    """Coordinates split by size: infinitesimal units ``I``, finite units ``F``,
    infinite ``G``, and positive-value ``P`` (support coordinates included)."""

    I: frozenset
    F: frozenset
    G: frozenset
    P: frozenset
    delta_kernel: ConvexSubgroup = field(compare=False)

    @property
    def p(self):
        return len(self.I) + len(self.F) + len(self.G)

    @property
    def unit_coordinates(self):
        return self.I | self.F | self.G

    def triple(self):
        return (self.I, self.F, self.G)

    def as_dict(self):
        return {k: sorted(getattr(self, k)) for k in ("I", "F", "G", "P")}


def classify(point):
    delta = point.delta
    I, F, G, P = set(), set(), set(), set()
    for j, v in enumerate(point.coordinate_values, start=1):
        if v is INF:
            P.add(j)
            continue
        s = v.sign()
        if s < 0:
            G.add(j)
        elif s == 0:
            F.add(j)
        elif v in delta:
            I.add(j)
        else:
            P.add(j)
    return Classification(frozenset(I), frozenset(F), frozenset(G), frozenset(P), delta)


def is_finite_point(point):
    return not point.classification.G


def point_equal(p, q):
    if p.n != q.n or p.m != q.m or p.signs != q.signs:
        return False
    return all(a == b for a, b in zip(p.images, q.images))
