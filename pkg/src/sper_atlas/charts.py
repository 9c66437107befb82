"""Coordinate charts ``y_j = x_j`` or ``1/x_j`` and the induced map on points.

For a set ``T`` of coordinates avoiding the support, :func:`transform`
sends a point to the point of ``Q[y_1..y_n]`` with the same image field,
inverting the images of ``x_j`` for ``j in T``.  When ``T`` contains all
infinite coordinates and only unit-size ones besides, the result is a
finite point; :func:`verify_prop31` checks how its valuation relates to
that of the original point.
"""

from __future__ import annotations

from itertools import chain, combinations

from ._linalg import integer_inverse
from .errors import ChartOnSupport, InvalidChart, SupportObstruction
from .hahn import HahnFraction, HahnPoly
from .lexgroups import (
    INF,
    archimedean_bound,
    dominated,
    ogm_equiv,
    project_mod,
    q_lin_independent,
)
from .points import Point, Polynomial, classify, fine_valuation
from .reports import FAIL, PASS, SKIPPED, CheckReport

__all__ = [
    "valid_charts",
    "check_chart",
    "transform",
    "inverse_transform",
    "chart_pullback",
    "phi_tilde_report",
    "verify_prop31",
    "MonomialMap",
    "monomial_substitution",
]


def _powerset(items):
    items = sorted(items)
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


def valid_charts(classification):
    """Every ``T`` with ``G <= T <= G | F``, smallest first."""
    G = classification.G
    return [frozenset(G) | frozenset(extra) for extra in _powerset(classification.F)]


def check_chart(classification, T):
    T = frozenset(T)
    G, F = classification.G, classification.F
    if not (G <= T <= G | F):
        raise InvalidChart(
            f"T={sorted(T)} must contain G={sorted(G)} and lie inside G|F={sorted(G | F)}"
        )
    return T


def transform(point, T):
    """Image of ``point`` in the chart that inverts the coordinates in ``T``."""
    T = frozenset(T)
    for j in T:
        if not 1 <= j <= point.n:
            raise ValueError(f"chart index {j} outside 1..{point.n}")
        if point.image(j).is_zero():
            raise ChartOnSupport(f"x{j} vanishes at the point and cannot be inverted")
    images = tuple(
        point.image(j).invert() if j in T else point.image(j) for j in range(1, point.n + 1)
    )
    return Point(images, point.signs, point.exponent_field)


def inverse_transform(point, T):
    # inverting the same coordinates again undoes the chart
    return transform(point, T)


def chart_pullback(g, T):
    """Rewrite ``g(y)`` in the ``x`` coordinates.

    Returns ``(h, degrees)`` with ``g(y) = h(x) / prod_{j in T} x_j^degrees[j]``,
    ``h`` a polynomial.  Used to compare orders across a chart.
    """
    T = frozenset(T)
    degs = g.degrees()
    n = g.n
    terms = {}
    for e, c in g.terms.items():
        new = tuple(degs[i] - e[i] if (i + 1) in T else e[i] for i in range(n))
        terms[new] = terms.get(new, 0) + c
    h = Polynomial(n, terms)
    return h, {j: degs[j - 1] for j in T}


def _star_values(point, T):
    star = transform(point, T)
    return star, star.coordinate_nu


def phi_tilde_report(point, T):
    """Per coordinate: the value of ``y_j`` at the charted point, the value of
    ``x_j`` at the original point, and whether the quotient map sends one to the other."""
    cls = classify(point)
    T = check_chart(cls, T)
    star, nu_star = _star_values(point, T)
    delta = point.delta
    rows = []
    for j in range(1, point.n + 1):
        a, b = nu_star[j - 1], point.coordinate_nu[j - 1]
        rows.append(
            {
                "j": j,
                "nu_star": a,
                "nu_delta": b,
                "nu_delta_quotient": b if b is INF else b.truncate(delta.quotient_rank),
                "consistent": project_mod(a, delta) == b,
            }
        )
    return rows


def _witness_corpus(point):
    """``x_j``, ``1/x_j`` off the support, and every monomial of degree two."""
    corpus = []
    n = point.n
    for j in range(1, n + 1):
        corpus.append((f"x{j}", point.image(j)))
        if not point.image(j).is_zero():
            corpus.append((f"1/x{j}", point.image(j).invert()))
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            name = f"x{i}^2" if i == j else f"x{i}*x{j}"
            corpus.append((name, point.image(i) * point.image(j)))
    return corpus


CORPUS_NOTE = (
    "Clause 4 is checked on the witness corpus {x_j, 1/x_j, degree-2 monomials} "
    "together with convexity of the kernel; it is not quantified over the whole field."
)


def verify_prop31(point, T):
    """Check the seven relations between the valuations of a point and of its chart image.

    ``T`` must satisfy ``G <= T <= G | F`` for the point's classification.
    Clause 7 is skipped when its hypothesis (Q-independence of the positive
    values) fails.
    """
    cls = classify(point)
    T = check_chart(cls, T)
    star, nu_star = _star_values(point, T)
    nu = point.coordinate_nu
    delta = point.delta
    I, F, G, P = sorted(cls.I), sorted(cls.F), sorted(cls.G), sorted(cls.P)
    units = sorted(cls.unit_coordinates)

    def ns(j):
        return nu_star[j - 1]

    rep = CheckReport(subject=f"chart T={sorted(T)}", key="clause")
    rep.notes.append(CORPUS_NOTE)

    # (1) unit-size coordinates keep value 0
    bad = [j for j in F if ns(j) is INF or not ns(j).is_zero()]
    rep.check("1", not bad, coordinates=F, offending=bad)

    # (2) infinitesimal and inverted infinite coordinates become positive
    bad = [j for j in I + G if ns(j) is INF or ns(j).sign() <= 0]
    rep.check("2", not bad, coordinates=I + G, offending=bad)

    # (3) some inverted infinite coordinate dominates every infinitesimal one
    if not I:
        rep.add("3", PASS, vacuous=True, reason="I is empty")
    elif not G:
        rep.add("3", FAIL, reason="I is nonempty but G is empty")
    else:
        q = min(G, key=lambda g: (point.coordinate_values[g - 1].level(), point.coordinate_values[g - 1]))
        bounds = [archimedean_bound(ns(q), ns(j)) for j in I]
        if any(b is None for b in bounds):
            rep.add("3", FAIL, q=q, offending=[j for j, b in zip(I, bounds) if b is None])
        else:
            N = max(bounds)
            ok = all(N * ns(q) > ns(j) for j in I)
            rep.check("3", ok, q=q, N=N)

    # (4) R_{delta*} inside R_delta on the corpus, order-preserving quotient, convex kernel
    corpus = _witness_corpus(point)
    values = [(name, fine_valuation(point, f)) for name, f in corpus]
    star_delta = star.delta
    bad_inclusion, bad_order, bad_kernel = [], [], []
    finite_vals = [(nm, v) for nm, v in values if v is not INF]
    for name, v in finite_vals:
        vs, vd = project_mod(v, star_delta), project_mod(v, delta)
        if vs.sign() >= 0 and vd.sign() < 0:
            bad_inclusion.append(name)
        if (vd.is_zero()) != (v in delta):
            bad_kernel.append(name)
    for (n1, v1), (n2, v2) in combinations(finite_vals, 2):
        a, b = project_mod(v1, star_delta), project_mod(v2, star_delta)
        if a <= b and not project_mod(v1, delta) <= project_mod(v2, delta):
            bad_order.append((n1, n2))
        if b <= a and not project_mod(v2, delta) <= project_mod(v1, delta):
            bad_order.append((n2, n1))
    kernel_vals = [v for _, v in finite_vals if v in delta]
    for v in kernel_vals:
        for _, w in finite_vals:
            if abs_le(w, v) and w not in delta:
                bad_kernel.append(str(w))
    negatives_inside = all(
        v in delta for v in point.coordinate_values if v is not INF and v.sign() < 0
    )
    ok4 = not (bad_inclusion or bad_order or bad_kernel) and negatives_inside
    rep.check(
        "4",
        ok4,
        kernel_cut_level=delta.cut_level,
        corpus_size=len(corpus),
        inclusion_failures=bad_inclusion,
        order_failures=bad_order,
        kernel_failures=bad_kernel,
    )

    # (5) the quotient map sends nu*(y_j) to nu(x_j)
    bad = [j for j in range(1, point.n + 1) if project_mod(ns(j), delta) != nu[j - 1]]
    rep.check("5", not bad, offending=bad)

    # (6) values of unit coordinates are infinitely smaller than the positive ones
    bad = [(j, t) for j in units for t in P if not dominated(ns(j), ns(t))]
    rep.check("6", not bad, offending=bad)

    # (7) marked-group equivalence of the positive-value tuples
    tail_star = [ns(t) for t in P]
    tail = [nu[t - 1] for t in P]
    if any(v is INF for v in tail):
        rep.add("7", SKIPPED, reason="a positive-value coordinate lies in the support", coordinates=P)
    elif not q_lin_independent(tail):
        rep.add(
            "7",
            SKIPPED,
            reason="hypothesis fails: the positive values are not Q-linearly independent",
            coordinates=P,
            values=tail,
            equivalent=ogm_equiv(tail_star, tail),
        )
    else:
        rep.check("7", ogm_equiv(tail_star, tail), coordinates=P, values=tail, star_values=tail_star)
    return rep


def abs_le(w, v):
    """``|w| <= |v|`` in the lex order."""
    aw = w if w.sign() >= 0 else -w
    av = v if v.sign() >= 0 else -v
    return aw <= av


class MonomialMap:
    """Substitution ``x_i -> prod_j x'_j^E[i][j]`` with a unimodular integer matrix ``E``."""

    def __init__(self, matrix):
        self.matrix = [[int(x) for x in row] for row in matrix]
        n = len(self.matrix)
        if any(len(row) != n for row in self.matrix):
            raise ValueError("monomial map matrix must be square")
        try:
            self.inverse_matrix = integer_inverse(self.matrix)
        except ValueError as exc:
            raise ValueError(f"monomial map is not invertible over Z: {exc}") from None

    @property
    def n(self):
        return len(self.matrix)

    def inverse(self):
        return MonomialMap(self.inverse_matrix)

    def pull_polynomial(self, f):
        """``f`` composed with the substitution (entries of ``E`` must be non-negative)."""
        return f.substitute_monomials(self.matrix)

    def __repr__(self):
        return f"MonomialMap({self.matrix})"


def monomial_substitution(point, mono):
    """The point ``d'`` with ``d'(prod_j x'_j^E[i][j]) = d(x_i)`` for every ``i``."""
    if not isinstance(mono, MonomialMap):
        mono = MonomialMap(mono)
    if mono.n != point.n:
        raise ValueError(f"{mono.n}x{mono.n} map for a point with n={point.n}")
    m = point.m
    images = []
    for j in range(point.n):
        acc = HahnFraction(HahnPoly.constant(1, m))
        for i, k in enumerate(mono.inverse_matrix[j]):
            if not k:
                continue
            base = point.images[i]
            if k < 0 and base.is_zero():
                raise SupportObstruction(f"x{i + 1} vanishes but appears with exponent {k}")
            acc = acc * base ** k
        images.append(acc)
    return Point(tuple(images), point.signs, point.exponent_field)
