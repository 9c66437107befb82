"""Membership in the chart-domain sets and the covering/transfer checks built on it.

Index sets are 1-based.  For a triple ``(I, F, G)`` the unit coordinates
are ``S = I | F | G``; every other coordinate must have positive value.
Starred sets live in the chart ring and are tested on charted points.

Each predicate is decided exactly from valuations: ``|x_j|`` below every
positive constant iff its value is positive, between two positive constants
iff its value is zero, above every constant iff its value is negative.
``exists N`` / ``for all N`` value conditions become level comparisons.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import chain, combinations, product

from .charts import check_chart, inverse_transform, transform
from .errors import MalformedDescriptor
from .hahn import HahnFraction, HahnPoly, SignData
from .lexgroups import (
    INF,
    LexVector,
    archimedean_bound,
    dominated,
    ogm_equiv,
    q_lin_independent,
    scalewise_independent,
)
from .points import Point, classify, is_finite_point, point_equal
from .reports import FAIL, PASS, SAMPLE_LIMITATION, SKIPPED, CheckReport
from .scalars import QuadExt

__all__ = [
    "KINDS",
    "USetDescriptor",
    "u_membership",
    "partition_check",
    "theorem_check",
    "random_point",
    "random_sample",
    "AtlasReport",
]

KINDS = ("IFG", "IFG*", "aIFG", "aIFG*", "HT", "HT*")

_EMPTY = frozenset()


@dataclass(frozen=True)
class USetDescriptor:
    """Names one of the six set families; ``chart`` optionally records ``T`` for
    the starred triple kinds, ``anchor`` is the marked tuple of the anchored kinds."""

    kind: str
    I: frozenset = _EMPTY
    F: frozenset = _EMPTY
    G: frozenset = _EMPTY
    H: frozenset = _EMPTY
    T: frozenset = _EMPTY
    chart: frozenset = None
    anchor: tuple = None

    def __post_init__(self):
        for name in ("I", "F", "G", "H", "T"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        if self.chart is not None:
            object.__setattr__(self, "chart", frozenset(self.chart))
        if self.anchor is not None:
            object.__setattr__(self, "anchor", tuple(self.anchor))
        if self.kind not in KINDS:
            raise MalformedDescriptor(f"unknown kind {self.kind!r}")
        if self.kind.endswith("HT") or self.kind.endswith("HT*"):
            if self.H & self.T:
                raise MalformedDescriptor("H and T must be disjoint")
            if self.I or self.F or self.G or self.anchor is not None:
                raise MalformedDescriptor("H/T descriptors take no I, F, G or anchor")
        else:
            if (self.I & self.F) or (self.I & self.G) or (self.F & self.G):
                raise MalformedDescriptor("I, F, G must be pairwise disjoint")
            if self.I and not self.G:
                raise MalformedDescriptor("I must be empty when G is empty")
            if self.H or self.T:
                raise MalformedDescriptor("triple descriptors take no H or T")
            if self.kind.startswith("a") and self.anchor is None:
                raise MalformedDescriptor(f"kind {self.kind} needs an anchor")
            if not self.kind.startswith("a") and self.anchor is not None:
                raise MalformedDescriptor(f"kind {self.kind} takes no anchor")
            if self.chart is not None:
                if not self.kind.endswith("*"):
                    raise MalformedDescriptor("only starred kinds carry a chart")
                if not (self.G <= self.chart <= self.G | self.F):
                    raise MalformedDescriptor("chart must satisfy G <= T <= G | F")

    @property
    def starred(self):
        return self.kind.endswith("*")

    @property
    def units(self):
        return self.I | self.F | self.G | self.H | self.T

    def validate(self, n):
        idx = self.units | (self.chart or _EMPTY)
        if any(not 1 <= j <= n for j in idx):
            raise MalformedDescriptor(f"index outside 1..{n}")
        if self.anchor is not None:
            if len(self.anchor) != n:
                raise MalformedDescriptor(f"anchor has {len(self.anchor)} entries, expected {n}")
            ranks = {len(a) for a in self.anchor}
            if len(ranks) != 1:
                raise MalformedDescriptor("anchor entries must share one rank")
            if any(not self.anchor[j - 1].is_zero() for j in self.units):
                raise MalformedDescriptor("anchor entries on the unit coordinates must be 0")


# -- predicates ---------------------------------------------------------


def _tail(n, S):
    return [t for t in range(1, n + 1) if t not in S]


def _base(point, S):
    """Value zero on ``S`` and positive value elsewhere, for the point's own valuation."""
    nu = point.coordinate_nu
    for j in range(1, point.n + 1):
        v = nu[j - 1]
        if j in S:
            if v is INF or not v.is_zero():
                return False
        elif v is not INF and v.sign() <= 0:
            return False
    return True


def _member_ifg(point, I, F, G):
    fine = point.coordinate_values
    for j in I:
        v = fine[j - 1]
        if v is not INF and v.sign() <= 0:
            return False
    for j in F:
        v = fine[j - 1]
        if v is INF or not v.is_zero():
            return False
    for j in G:
        v = fine[j - 1]
        if v is INF or v.sign() >= 0:
            return False
    return _base(point, I | F | G)


def _member_ht(point, H, T):
    fine = point.coordinate_values
    for j in H:
        v = fine[j - 1]
        if v is not INF and v.sign() < 0:
            return False
    for j in T:
        v = fine[j - 1]
        if v is INF or v.sign() > 0:
            return False
    return _base(point, H | T)


def _star_base(star, S):
    """Finite point, unit coordinates off the support, positive values on the tail,
    and every unit value infinitely smaller than every tail value."""
    if not is_finite_point(star):
        return False
    nu = star.coordinate_nu
    tail = _tail(star.n, S)
    for j in S:
        if nu[j - 1] is INF:
            return False
    for t in tail:
        v = nu[t - 1]
        if v is not INF and v.sign() <= 0:
            return False
    return all(dominated(nu[j - 1], nu[t - 1]) for j in S for t in tail)


def _exists_dominating(nu, candidates, targets):
    if not targets:
        return True
    for q in candidates:
        if all(archimedean_bound(nu[q - 1], nu[j - 1]) is not None for j in targets):
            return True
    return False


def _member_ifg_star(star, I, F, G):
    nu = star.coordinate_nu
    if not _star_base(star, I | F | G):
        return False
    for j in F:
        if nu[j - 1].sign() > 0:
            return False
    for j in I | G:
        if nu[j - 1].sign() <= 0:
            return False
    return _exists_dominating(nu, sorted(G), sorted(I))


def _member_ht_star(star, H, T):
    nu = star.coordinate_nu
    if not _star_base(star, H | T):
        return False
    infinitesimal = [j for j in sorted(H) if not nu[j - 1].is_zero()]
    return _exists_dominating(nu, sorted(T), infinitesimal)


def _anchor_match(values, anchor):
    if any(v is INF for v in values):
        return False
    return ogm_equiv(values, anchor)


def u_membership(point, d):
    """Whether ``point`` lies in the set described by ``d``.

    Starred kinds expect a point of the chart ring (the output of
    :func:`~sper_atlas.charts.transform`).
    """
    d.validate(point.n)
    if d.kind == "IFG":
        return _member_ifg(point, d.I, d.F, d.G)
    if d.kind == "IFG*":
        return _member_ifg_star(point, d.I, d.F, d.G)
    if d.kind == "HT":
        return _member_ht(point, d.H, d.T)
    if d.kind == "HT*":
        return _member_ht_star(point, d.H, d.T)
    S = d.I | d.F | d.G
    if d.kind == "aIFG":
        return _member_ifg(point, d.I, d.F, d.G) and _anchor_match(
            list(point.coordinate_nu), list(d.anchor)
        )
    tail = _tail(point.n, S)
    return _member_ifg_star(point, d.I, d.F, d.G) and _anchor_match(
        [point.coordinate_nu[t - 1] for t in tail], [d.anchor[t - 1] for t in tail]
    )


# -- enumeration --------------------------------------------------------


def all_triples(n):
    """Every ``(I, F, G)`` of disjoint subsets of 1..n with ``I`` empty when ``G`` is."""
    for labels in product("IFGP", repeat=n):
        I = frozenset(j for j, c in enumerate(labels, 1) if c == "I")
        G = frozenset(j for j, c in enumerate(labels, 1) if c == "G")
        if I and not G:
            continue
        F = frozenset(j for j, c in enumerate(labels, 1) if c == "F")
        yield I, F, G


def all_pairs(n):
    for labels in product("HTP", repeat=n):
        yield (
            frozenset(j for j, c in enumerate(labels, 1) if c == "H"),
            frozenset(j for j, c in enumerate(labels, 1) if c == "T"),
        )


def _subsets(s):
    s = sorted(s)
    return (frozenset(c) for c in chain.from_iterable(combinations(s, k) for k in range(len(s) + 1)))


def constituents(H, T):
    """Triples ``(I, F, G)`` with ``I | F | G = H | T``, ``I <= H``, ``G <= T``."""
    for I in _subsets(H):
        for G in _subsets(T):
            if I and not G:
                continue
            yield I, (H | T) - I - G, G


@dataclass
class AtlasReport:
    reports: list = field(default_factory=list)

    @property
    def violations(self):
        return sum(len(r.failures) for r in self.reports)

    @property
    def ok(self):
        return self.violations == 0

    def to_dict(self):
        return {
            "header": SAMPLE_LIMITATION,
            "points": [
                {"point_id": i, **r.to_dict()} for i, r in enumerate(self.reports)
            ],
            "violations": self.violations,
        }


def _partition_one(point):
    cls = classify(point)
    rep = CheckReport(subject="partition")
    hits = [t for t in all_triples(point.n) if _member_ifg(point, *t)]
    rep.check(
        "unique_IFG",
        len(hits) == 1 and hits[0] == cls.triple(),
        members=[list(map(sorted, t)) for t in hits],
        classification=cls.as_dict(),
    )
    S = cls.unit_coordinates
    wrong, bad_split = [], []
    covered = 0
    for H, T in all_pairs(point.n):
        member = _member_ht(point, H, T)
        predicted = (H | T) == S and cls.I <= H and cls.G <= T
        if member != predicted:
            wrong.append((sorted(H), sorted(T), member))
        if member:
            covered += 1
            parts = [c for c in constituents(H, T) if _member_ifg(point, *c)]
            if len(parts) != 1:
                bad_split.append((sorted(H), sorted(T), len(parts)))
    rep.check("HT_cover", not wrong and covered > 0, covering_sets=covered, mismatches=wrong)
    rep.check("HT_decomposition", not bad_split, offending=bad_split)
    return rep


def partition_check(sample, workers=1):
    """Check that each point lies in exactly one triple set and in exactly the
    predicted pair sets, each of which splits into exactly one triple set."""
    sample = list(sample)
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_partition_one, sample, chunksize=8))
    else:
        reports = [_partition_one(p) for p in sample]
    return AtlasReport(reports)


def _neighbour_triples(n, triple):
    """Triples differing from ``triple`` by the class of one coordinate."""
    I, F, G = triple
    label = {j: "P" for j in range(1, n + 1)}
    for name, s in zip("IFG", triple):
        for j in s:
            label[j] = name
    for j in range(1, n + 1):
        for new in "IFGP":
            if new == label[j]:
                continue
            lab = {**label, j: new}
            parts = [frozenset(k for k, c in lab.items() if c == x) for x in "IFG"]
            if parts[0] and not parts[2]:
                continue
            yield tuple(parts)


def theorem_check(point, T, anchor=None):
    """Check that the chart map carries each set onto its starred counterpart at ``point``.

    ``anchor`` (optional) is an n-tuple of vectors that vanishes on the unit
    coordinates; the anchored transfers are gated on its tail being
    Q-independent (forward) and scalewise independent (backward).
    """
    cls = classify(point)
    T = check_chart(cls, T)
    star = transform(point, T)
    back = inverse_transform(star, T)
    I, F, G = cls.triple()
    S = cls.unit_coordinates
    rep = CheckReport(subject=f"chart T={sorted(T)}")
    rep.notes.append(SAMPLE_LIMITATION)

    rep.check("roundtrip", point_equal(back, point))
    rep.check("star_is_finite", is_finite_point(star))

    in_u = _member_ifg(point, I, F, G)
    in_star = _member_ifg_star(star, I, F, G)
    rep.check("forward_IFG", in_u and in_star, in_U=in_u, in_U_star=in_star)
    rep.check("backward_IFG", (not in_star) or _member_ifg(back, I, F, G), in_U_star=in_star)

    mismatches = []
    for t in _neighbour_triples(point.n, (I, F, G)):
        if not (t[2] <= T <= t[2] | t[1]):
            continue
        a, b = _member_ifg(point, *t), _member_ifg_star(star, *t)
        if a != b:
            mismatches.append(([sorted(x) for x in t], a, b))
    rep.check("transfer_neighbours", not mismatches, mismatches=mismatches)

    bad_ht = []
    for H in _subsets(frozenset(range(1, point.n + 1)) - T):
        a, b = _member_ht(point, H, T), _member_ht_star(star, H, T)
        if a != b:
            bad_ht.append((sorted(H), a, b))
    rep.check("transfer_HT", not bad_ht, mismatches=bad_ht, H_expected=sorted(S - T))

    if anchor is not None:
        anchor = tuple(anchor)
        USetDescriptor("aIFG", I, F, G, anchor=anchor).validate(point.n)
        tail = _tail(point.n, S)
        a_tail = [anchor[t - 1] for t in tail]
        indep = q_lin_independent(a_tail)
        scal = scalewise_independent(a_tail)
        nu, nu_star = point.coordinate_nu, star.coordinate_nu
        in_ua = in_u and _anchor_match(list(nu), list(anchor))
        in_ua_star = in_star and _anchor_match([nu_star[t - 1] for t in tail], a_tail)
        flags = dict(q_independent=indep, scalewise=scal, in_Ua=in_ua, in_Ua_star=in_ua_star)
        if indep:
            rep.check("forward_aIFG", (not in_ua) or in_ua_star, **flags)
        else:
            rep.add(
                "forward_aIFG",
                SKIPPED,
                reason="scalewise hypothesis fails: anchor tail is not even Q-linearly independent",
                **flags,
            )
        if scal:
            back_ok = _member_ifg(back, I, F, G) and _anchor_match(
                list(back.coordinate_nu), list(anchor)
            )
            rep.check("backward_aIFG", (not in_ua_star) or back_ok, **flags)
        else:
            rep.add("backward_aIFG", SKIPPED, reason="scalewise hypothesis fails", **flags)
    return rep


# -- sampling -----------------------------------------------------------

_COEFFS = [Fraction(k, d) for k in (-3, -2, -1, 1, 2, 3) for d in (1, 2)]


def _random_entry(rng, field):
    if field == "Qsqrt2" and rng.random() < 0.3:
        return QuadExt(rng.randint(-2, 2), rng.choice((-1, 1)) * rng.choice((1, Fraction(1, 2))))
    if rng.random() < 0.1:
        return QuadExt(Fraction(rng.choice((-3, -1, 1, 3)), 2))
    return QuadExt(rng.randint(-3, 3))


def _random_exponent(rng, m, field, p_zero=0.25):
    if rng.random() < p_zero:
        return LexVector.zero(m)
    coords = [_random_entry(rng, field) if rng.random() < 0.5 else QuadExt(0) for _ in range(m)]
    return LexVector(coords)


def _random_positive(rng, m, field):
    for _ in range(20):
        v = _random_exponent(rng, m, field, p_zero=0.0)
        s = v.sign()
        if s:
            return v if s > 0 else -v
    return LexVector.unit(m, m)


def random_point(seed, n=3, m=2, field="Q", density=0.5):
    """Deterministic pseudorandom point.

    Each image is ``u * t^g * (1 + h)`` or its reciprocal, ``h`` a series of
    positive value with about ``3 * density`` terms; about one image in ten
    is zero.  Negative sign axes are only drawn where all exponents are integers.
    """
    if not (1 <= n <= 8 and 1 <= m <= 8):
        raise ValueError("random_point needs 1 <= n <= 8 and 1 <= m <= 8")
    if field not in ("Q", "Qsqrt2"):
        raise ValueError(f"unknown exponent field {field!r}")
    rng = random.Random(seed)
    images = []
    for _ in range(n):
        if rng.random() < 0.1:
            images.append(HahnFraction(HahnPoly.zero(m)))
            continue
        u = rng.choice(_COEFFS)
        g = _random_exponent(rng, m, field)
        body = HahnPoly.constant(1, m)
        for _ in range(3):
            if rng.random() < density:
                body = body + HahnPoly.monomial(_random_positive(rng, m, field), rng.choice(_COEFFS))
        if body.is_zero():
            body = HahnPoly.constant(1, m)
        im = HahnFraction(body.shift(g) * u)
        if rng.random() < 0.2:
            im = im.invert()
        images.append(im)
    integral = [True] * m
    for im in images:
        for poly in (im.num, im.den):
            for e in poly.terms:
                for i, c in enumerate(e.coords):
                    if not c.is_integer():
                        integral[i] = False
    signs = SignData([rng.choice((1, -1)) if integral[i] else 1 for i in range(m)])
    return Point(tuple(images), signs, field)


def random_sample(count, seed, n=None, m=None, field=None, density=0.5):
    """``count`` reproducible points; unset shape parameters cycle through
    n = 1..6, m = 1..4 and both exponent fields."""
    rng = random.Random(seed)
    points = []
    for i in range(count):
        s = rng.getrandbits(48)
        points.append(
            random_point(
                s,
                n=n or 1 + i % 6,
                m=m or 1 + (i // 6) % 4,
                field=field or ("Q", "Qsqrt2")[i % 2],
                density=density,
            )
        )
    return points
