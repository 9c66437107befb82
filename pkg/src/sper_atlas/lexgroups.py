"""Lexicographically ordered groups ``Q(sqrt2)^m``.

Everything valuation-valued in the package lives here: :class:`LexVector`
elements, the value ``INF`` of the zero element, level-cut convex subgroups
and their quotient maps, plus the two tuple-level decision procedures
(:func:`ogm_equiv` and :func:`scalewise_independent`).

Levels are 1-based: the level of ``v`` is the index of its first nonzero
coordinate, ``m + 1`` for the zero vector.  Smaller level means larger
archimedean class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._linalg import rank, reduce_mod, rref
from .errors import RankMismatch
from .scalars import QuadExt, as_quad, format_scalar

__all__ = [
    "LexVector",
    "INF",
    "lex_cmp",
    "level",
    "ConvexSubgroup",
    "convex_hull",
    "project_mod",
    "RelCanonicalForm",
    "rel_canonical_form",
    "ogm_equiv",
    "q_lin_independent",
    "realized_levels",
    "scalewise_independent",
    "dominated",
    "archimedean_bound",
]

LT, EQ, GT = -1, 0, 1


class _Infinity:
    """The value of zero: larger than every element of every value group."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    __str__ = __repr__

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("sper_atlas.INF")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


class LexVector:
    """An element of ``Q(sqrt2)^m`` ordered lexicographically."""

    __slots__ = ("coords", "_hash")

    def __init__(self, coords):
        self.coords = tuple(as_quad(c) for c in coords)
        self._hash = None

    @classmethod
    def _raw(cls, coords):
        obj = object.__new__(cls)
        obj.coords = coords
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, m):
        z = QuadExt._raw(0, 0)
        return cls._raw((z,) * m)

    @classmethod
    def unit(cls, m, i, scale=1):
        """``scale`` times the ``i``-th (1-based) basis vector of rank ``m``."""
        c = [0] * m
        c[i - 1] = scale
        return cls(c)

    @property
    def m(self):
        return len(self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other):
        if len(other.coords) != len(self.coords):
            raise RankMismatch(f"rank {len(self.coords)} vs {len(other.coords)}")

    def __add__(self, other):
        if other is INF:
            return INF
        if not isinstance(other, LexVector):
            return NotImplemented
        self._check(other)
        return LexVector._raw(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, LexVector):
            return NotImplemented
        self._check(other)
        return LexVector._raw(tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return LexVector._raw(tuple(-x for x in self.coords))

    def __mul__(self, k):
        if isinstance(k, LexVector):
            return NotImplemented
        return LexVector._raw(tuple(x * k for x in self.coords))

    __rmul__ = __mul__

    def __bool__(self):
        return any(self.coords)

    def is_zero(self):
        return not any(self.coords)

    def sign(self):
        for c in self.coords:
            s = c.sign()
            if s:
                return s
        return 0

    def level(self):
        for i, c in enumerate(self.coords):
            if c:
                return i + 1
        return len(self.coords) + 1

    def truncate(self, k):
        """The first ``k`` coordinates (the quotient representative after a cut)."""
        return LexVector._raw(self.coords[:k])

    def is_rational(self):
        return all(c.is_rational() for c in self.coords)

    def __eq__(self, other):
        if isinstance(other, LexVector):
            return self.coords == other.coords
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coords)
        return self._hash

    def _cmp(self, other):
        if other is INF:
            return LT
        if not isinstance(other, LexVector):
            return NotImplemented
        return lex_cmp(self, other)

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

    def __repr__(self):
        return "LexVector(" + ", ".join(format_scalar(c) for c in self.coords) + ")"

    def __str__(self):
        return "(" + ",".join(format_scalar(c) for c in self.coords) + ")"


def lex_cmp(u, v):
    """Return -1, 0 or 1 as ``u`` is lexicographically below, equal to or above ``v``."""
    if len(u.coords) != len(v.coords):
        raise RankMismatch(f"rank {len(u.coords)} vs {len(v.coords)}")
    for x, y in zip(u.coords, v.coords):
        if x == y:
            continue
        return (x - y).sign()
    return EQ


def level(u):
    return u.level()


@dataclass(frozen=True)
class ConvexSubgroup:
    """``{v : level(v) >= cut_level}`` inside the rank-``m`` ambient group."""

    m: int
    cut_level: int

    def __post_init__(self):
        if not 1 <= self.cut_level <= self.m + 1:
            raise ValueError(f"cut_level {self.cut_level} outside [1, {self.m + 1}]")

    def __contains__(self, v):
        if v is INF:
            return False
        return v.level() >= self.cut_level

    @property
    def is_trivial(self):
        return self.cut_level == self.m + 1

    @property
    def quotient_rank(self):
        return self.cut_level - 1


def convex_hull(vectors, m):
    """Smallest level-cut subgroup of the rank-``m`` group containing ``vectors``."""
    cut = m + 1
    for v in vectors:
        if len(v) != m:
            raise RankMismatch(f"rank {len(v)} vs {m}")
        cut = min(cut, v.level())
    return ConvexSubgroup(m, cut)


def project_mod(u, delta):
    """Image of ``u`` in the quotient by ``delta``, as a vector with a zeroed tail."""
    if u is INF:
        return INF
    if len(u) != delta.m:
        raise RankMismatch(f"rank {len(u)} vs {delta.m}")
    k = delta.cut_level - 1
    if k >= len(u.coords):
        return u
    z = QuadExt._raw(0, 0)
    return LexVector._raw(u.coords[:k] + (z,) * (len(u.coords) - k))


# -- archimedean comparisons -------------------------------------------


def dominated(a, b):
    """True iff ``N*a < b`` for every natural number ``N`` (0 included)."""
    if b is INF:
        return a is not INF
    if a is INF:
        return False
    if b.sign() <= 0:
        return False
    return a.sign() <= 0 or a.level() > b.level()


def archimedean_bound(a, b):
    """Some integer ``N >= 1`` with ``N*a > b``, or ``None`` if none exists.

    In the single-level case the answer is the least integer exceeding the
    ratio of the leading coordinates, so it is minimal there.
    """
    if a is INF or b is INF:
        return None
    sa = a.sign()
    if sa <= 0:
        return 1 if a > b else None
    if b.sign() <= 0:
        return 1
    la, lb = a.level(), b.level()
    if la < lb:
        return 1
    if la > lb:
        return None
    ratio = b.coords[lb - 1] / a.coords[la - 1]
    n = max(1, math.floor(ratio) + 1)
    assert n * a > b
    return n


# -- tuple-level procedures --------------------------------------------


def _rational_matrix(vectors):
    """Rows = vectors, each QuadExt coordinate split into its (a, b) parts."""
    return [[part for c in v.coords for part in (c.a, c.b)] for v in vectors]


def q_lin_independent(vectors):
    vectors = list(vectors)
    if not vectors:
        return True
    if any(v is INF for v in vectors):
        return False
    m = len(vectors[0])
    return rank(_rational_matrix(vectors), 2 * m) == len(vectors)


def realized_levels(vectors):
    """Levels of the nonzero elements of the group generated by ``vectors``."""
    vectors = list(vectors)
    if not vectors:
        return []
    _, pivots = rref(_rational_matrix(vectors), 2 * len(vectors[0]))
    return sorted({p // 2 + 1 for p in pivots})


def scalewise_independent(vectors):
    """Q-independence of the images within every consecutive quotient of isolated subgroups."""
    vectors = list(vectors)
    if not vectors:
        return True
    if any(v is INF or v.is_zero() for v in vectors):
        return False
    m = len(vectors[0])
    levels = realized_levels(vectors)
    bounds = levels + [m + 1]
    for q, nxt in zip(levels, bounds[1:]):
        members = [v for v in vectors if v.level() == q]
        if not members:
            continue
        sliced = [LexVector._raw(v.coords[q - 1 : nxt - 1]) for v in members]
        if not q_lin_independent(sliced):
            return False
    return True


@dataclass(frozen=True)
class RelCanonicalForm:
    """Complete invariant of the sign function ``m -> sign(sum m_j a_j)`` on ``Z^l``.

    Each row is a linear form in ``m`` (entries in Q(sqrt2)): the order's
    archimedean classes from the top down, each restricted to the common
    zero set of the previous ones, reduced against a canonical rational
    basis of that zero set's annihilator and scaled so that its leading entry
    is +1 or -1.
    """

    length: int
    rows: tuple

    def to_strings(self):
        return [[format_scalar(x) for x in row] for row in self.rows]


def rel_canonical_form(vectors):
    vectors = list(vectors)
    ell = len(vectors)
    if ell == 0:
        return RelCanonicalForm(0, ())
    m = len(vectors[0])
    for v in vectors:
        if len(v) != m:
            raise RankMismatch("all vectors of a tuple must share the ambient rank")
    basis, pivots = [], []
    kept = []
    for i in range(m):
        form = [v.coords[i] for v in vectors]
        red = reduce_mod(form, basis, pivots)
        if not any(red):
            continue
        lead = next(x for x in red if x)
        scale = abs(lead)
        kept.append(tuple(x / scale for x in red))
        # zero set of this form on rationals = common kernel of its two parts
        new = [[x.a for x in red], [x.b for x in red]]
        basis, pivots = rref(basis + new, ell)
        if len(basis) == ell:
            break
    return RelCanonicalForm(ell, tuple(kept))


def ogm_equiv(a, b):
    """Whether two marked tuples define isomorphic marked ordered groups."""
    a, b = list(a), list(b)
    if len(a) != len(b):
        raise RankMismatch(f"tuple lengths {len(a)} vs {len(b)}")
    if any(v is INF for v in a + b):
        raise ValueError("INF is not a group element")
    return rel_canonical_form(a) == rel_canonical_form(b)
