"""Seeded generators and hypothesis strategies shared by the test modules."""

import random
from fractions import Fraction

from hypothesis import strategies as st

from oracles import box, order_preserving_image
from sper_atlas.hahn import HahnFraction, HahnPoly, SignData
from sper_atlas.lexgroups import LexVector
from sper_atlas.scalars import QuadExt

# -- hypothesis strategies ----------------------------------------------

rationals = st.builds(Fraction, st.integers(-12, 12), st.integers(1, 6))
quads = st.builds(QuadExt, rationals, rationals)
nonzero_quads = quads.filter(lambda q: q.sign() != 0)


def lexvectors(m, entries=None):
    if entries is None:
        entries = st.builds(QuadExt, st.integers(-3, 3), st.sampled_from([0, 0, 0, 1, -1, Fraction(1, 2)]))
    return st.lists(entries, min_size=m, max_size=m).map(LexVector)


def integer_lexvectors(m):
    return lexvectors(m, st.integers(-3, 3).map(QuadExt))


def hahn_polys(m, max_terms=4, integer=False):
    exps = integer_lexvectors(m) if integer else lexvectors(m)
    coeffs = st.builds(Fraction, st.integers(-5, 5).filter(bool), st.integers(1, 4))
    return st.lists(st.tuples(exps, coeffs), min_size=0, max_size=max_terms).map(lambda ts: HahnPoly(m, ts))


def nonzero_hahn_polys(m, **kw):
    return hahn_polys(m, **kw).filter(lambda p: not p.is_zero())


# -- seeded generators --------------------------------------------------


def random_exponent(rng, m, field="Q", integer=False):
    coords = []
    for _ in range(m):
        if integer:
            coords.append(QuadExt(rng.randint(-3, 3)))
        elif field == "Qsqrt2" and rng.random() < 0.25:
            coords.append(QuadExt(rng.randint(-2, 2), rng.choice([1, -1, Fraction(1, 2)])))
        else:
            coords.append(QuadExt(Fraction(rng.randint(-6, 6), rng.choice([1, 1, 2]))))
    return LexVector(coords)


def random_hahn(rng, m, field="Q", integer=False, terms=None):
    k = terms if terms is not None else rng.randint(1, 4)
    poly = HahnPoly.zero(m)
    while poly.is_zero():
        for _ in range(k):
            c = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2, 3]))
            poly = poly + HahnPoly.monomial(random_exponent(rng, m, field, integer), c)
    return poly


def random_fraction(rng, m, field="Q", integer=False):
    num = random_hahn(rng, m, field, integer)
    den = random_hahn(rng, m, field, integer, terms=rng.choice([1, 1, 2]))
    return HahnFraction(num, den)


def random_signs(rng, m):
    return SignData([rng.choice([1, -1]) for _ in range(m)])


def _entry(rng, field):
    if field == "Qsqrt2" and rng.random() < 0.2:
        return QuadExt(rng.choice([0, 1, -1]), rng.choice([1, -1]))
    return QuadExt(rng.choice([-1, 0, 0, 1, 1, 2]))


def random_tuple(rng, ell, m, field="Q"):
    return [LexVector([_entry(rng, field) for _ in range(m)]) for _ in range(ell)]


def _combo(vectors, ms):
    v = LexVector.zero(len(vectors[0]))
    for k, a in zip(ms, vectors):
        v = v + a * int(k)
    return v


def planted_inequivalent(rng, a):
    """A tuple whose sign function differs from that of ``a`` at some m in the
    box |m_i| <= 3 (the witness is built in, so a box search must find it)."""
    ell, m = len(a), len(a[0])
    candidates = [tuple(int(x) for x in row) for row in box(ell, 3) if any(row)]
    ms = rng.choice(candidates)
    v = _combo(a, ms)
    j = rng.choice([k for k in range(ell) if ms[k]])
    target = rng.choice([t for t in (-1, 0, 1) if t != v.sign()])
    b = [LexVector(list(x.coords)) for x in a]
    if target == 0:
        # make the combination vanish
        b[j] = a[j] - v * QuadExt(Fraction(1, ms[j]))
    else:
        # force the top coordinate of the combination to equal target
        shift = (QuadExt(target) - v.coords[0]) * QuadExt(Fraction(1, ms[j]))
        b[j] = a[j] + LexVector.unit(m, 1, shift)
    assert _combo(b, ms).sign() == target
    return b


def random_equiv_pair(rng):
    """``(a, b, expected)``: half equivalent images, half planted inequivalent pairs."""
    ell, m = rng.randint(1, 4), rng.randint(1, 4)
    field = rng.choice(["Q", "Qsqrt2"])
    a = random_tuple(rng, ell, m, field)
    if rng.random() < 0.5:
        b = order_preserving_image(a, rng, rng.randint(m, 4))
        if rng.random() < 0.3:
            b = order_preserving_image(b, rng)
        return a, b, True
    b = planted_inequivalent(rng, a)
    if rng.random() < 0.5:
        b = order_preserving_image(b, rng, rng.randint(m, 4))
    return a, b, False


def random_scalewise_tuple(rng):
    """Tuples biased towards sharing levels, so both outcomes are common."""
    ell, m = rng.randint(1, 4), rng.randint(1, 4)
    field = rng.choice(["Q", "Qsqrt2"])
    kind = rng.random()
    if kind < 0.4:
        return random_tuple(rng, ell, m, field)
    out = []
    for _ in range(ell):
        lvl = rng.randint(1, m)
        lead = _entry(rng, field) or QuadExt(1)
        coords = [QuadExt(0)] * (lvl - 1) + [lead] + [_entry(rng, field) for _ in range(m - lvl)]
        out.append(LexVector(coords))
    return out


def make_rng(seed):
    return random.Random(seed)
