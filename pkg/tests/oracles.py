"""Reference computations that avoid the package's own algorithms.

Sign functions are enumerated with numpy over an integer box; ranks come
from sympy.
"""

import itertools
import math
from fractions import Fraction

import numpy as np
import sympy

from sper_atlas.lexgroups import LexVector
from sper_atlas.scalars import QuadExt


def _integer_columns(vectors):
    """Per coordinate, the rational and sqrt2 parts of the tuple, scaled to
    integers by one positive factor (which does not change any sign)."""
    m = len(vectors[0])
    A = np.zeros((len(vectors), m), dtype=np.int64)
    B = np.zeros((len(vectors), m), dtype=np.int64)
    for i in range(m):
        parts = [(Fraction(v.coords[i].a), Fraction(v.coords[i].b)) for v in vectors]
        den = math.lcm(*(x.denominator for pair in parts for x in pair))
        for j, (a, b) in enumerate(parts):
            A[j, i] = int(a * den)
            B[j, i] = int(b * den)
    return A, B


def _quad_sign(u, v):
    """Sign of u + v*sqrt2 for integer arrays."""
    same = np.sign(u) * np.sign(v) >= 0
    s_same = np.sign(u + v)
    s_mixed = np.sign(u) * np.sign(u * u - 2 * v * v)
    return np.where(same, s_same, s_mixed)


def box(ell, bound=3):
    return np.array(list(itertools.product(range(-bound, bound + 1), repeat=ell)), dtype=np.int64)


def sign_table(vectors, bound=3):
    """sign(sum m_j a_j) for every m in the box |m_j| <= bound."""
    M = box(len(vectors), bound)
    A, B = _integer_columns(vectors)
    S = _quad_sign(M @ A, M @ B)
    # lex sign = first nonzero coordinate sign
    nz = S != 0
    first = np.where(nz.any(axis=1), nz.argmax(axis=1), 0)
    out = S[np.arange(len(M)), first]
    return np.where(nz.any(axis=1), out, 0)


def brute_equiv(a, b, bound=3):
    return bool(np.array_equal(sign_table(a, bound), sign_table(b, bound)))


def _split(v, lo, hi):
    return [x for c in v.coords[lo:hi] for x in (sympy.Rational(str(Fraction(c.a))), sympy.Rational(str(Fraction(c.b))))]


def sympy_rank(rows):
    if not rows or not rows[0]:
        return 0
    return sympy.Matrix(rows).rank()


def sympy_q_independent(vectors):
    return sympy_rank([_split(v, 0, len(v)) for v in vectors]) == len(vectors)


def sympy_levels(vectors):
    """Level i is realized iff adding coordinate i raises the rank of the prefix."""
    m = len(vectors[0])
    levels = []
    prev = 0
    for i in range(1, m + 1):
        r = sympy_rank([_split(v, 0, i) for v in vectors])
        if r > prev:
            levels.append(i)
        prev = r
    return levels


def sympy_scalewise(vectors):
    if any(v.is_zero() for v in vectors):
        return False
    m = len(vectors[0])
    levels = sympy_levels(vectors)
    ends = levels[1:] + [m + 1]
    for q, nxt in zip(levels, ends):
        members = [v for v in vectors if v.level() == q]
        if members and sympy_rank([_split(v, q - 1, nxt - 1) for v in members]) != len(members):
            return False
    return True


def brute_levels(vectors, bound=2):
    """Levels of the nonzero combinations over a small box."""
    found = set()
    for m in box(len(vectors), bound):
        v = LexVector.zero(len(vectors[0]))
        for k, a in zip(m, vectors):
            v = v + a * int(k)
        if not v.is_zero():
            found.add(v.level())
    return found


def order_preserving_image(vectors, rng, target_rank=None):
    """Image of a tuple under a random injective order-preserving map into a
    lex group: scale each coordinate by a positive constant, add positive or
    negative multiples of a coordinate to the coordinates below it, and pad
    with zero coordinates.  Equivalence is preserved."""
    m = len(vectors[0])
    rows = [list(v.coords) for v in vectors]
    scales = [QuadExt(rng.choice([1, 2, 3, Fraction(1, 2)]), rng.choice([0, 0, 1])) for _ in range(m)]
    weights = [[rng.choice([0, 0, 1, -1, 2]) for _ in range(i)] for i in range(m)]
    mixed = []
    for r in rows:
        out = []
        for i in range(m):
            c = r[i] * scales[i]
            for k in range(i):
                c = c + r[k] * weights[i][k]
            out.append(c)
        mixed.append(out)
    target = target_rank or m
    pad = max(0, target - m)
    for _ in range(pad):
        pos = rng.randint(0, len(mixed[0]))
        for r in mixed:
            r.insert(pos, QuadExt(0))
    return [LexVector(r) for r in mixed]
