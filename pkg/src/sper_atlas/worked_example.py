"""The five-coordinate point at infinity used throughout the docs and tests.

Rank-4 flattening: ``w = t^(0,0,0,1)`` and ``z = t^(0,0,-1,0)`` are the
residue transcendentals, ``t^(1,0,0,0)`` and ``t^(0,1,0,0)`` the two value
generators.  The point sends

    x1 -> w,  x2 -> 1 + t^(0,1,0,0),  x3 -> z,  x4 -> t^(1,0,0,0),  x5 -> z t^(1,0,0,0)

so ``x3`` is infinite, ``x1`` infinitesimal but bounded by powers of ``x3``,
and ``x4, x5`` have the same coarse value ``(1, 0)``.
"""

from __future__ import annotations

from .charts import MonomialMap, monomial_substitution, phi_tilde_report, transform, verify_prop31
from .hahn import HahnFraction, HahnPoly, SignData
from .lexgroups import LexVector, ogm_equiv
from .points import Point, classify

__all__ = [
    "example_point",
    "example_chart",
    "example_star_expected",
    "example_blowup",
    "example_blowup_chart",
    "Y5_NOTE",
    "example_report",
]

Y5_NOTE = (
    "y5 = x5 = z*t^(1,0) with z = 1/y3, so its image is t^(1,0,-1,0); "
    "a listing with t^(1,0,1,0) has the sign of the z-exponent flipped.  "
    "Either way the values of y4 and y5 differ, so the equivalence fails."
)


def _mono(*e):
    return HahnFraction(HahnPoly.monomial(LexVector(e)))


def example_point():
    images = (
        _mono(0, 0, 0, 1),
        HahnFraction(HahnPoly.constant(1, 4) + HahnPoly.monomial(LexVector((0, 1, 0, 0)))),
        _mono(0, 0, -1, 0),
        _mono(1, 0, 0, 0),
        _mono(1, 0, -1, 0),
    )
    return Point(images, SignData.positive(4), "Q")


example_chart = frozenset({3})


def example_star_expected():
    """Images of ``y1..y5`` after inverting ``x3``."""
    return (
        _mono(0, 0, 0, 1),
        HahnFraction(HahnPoly.constant(1, 4) + HahnPoly.monomial(LexVector((0, 1, 0, 0)))),
        _mono(0, 0, 1, 0),
        _mono(1, 0, 0, 0),
        _mono(1, 0, -1, 0),
    )


def example_blowup():
    """Monomial map ``x5 -> x4' x5'`` (others fixed)."""
    E = [[int(i == j) for j in range(5)] for i in range(5)]
    E[4][3] = 1
    return MonomialMap(E)


# after the blowup x5' is infinite as well, so the smallest chart inverts both
example_blowup_chart = frozenset({3, 5})


def example_report():
    """Everything the ``example-paper`` command prints, as a JSON-ready dict."""
    from .reports import jsonable

    delta = example_point()
    cls = classify(delta)
    star = transform(delta, example_chart)
    expected = example_star_expected()
    images_match = [a == b for a, b in zip(star.images, expected)]
    nu, nu_star = delta.coordinate_nu, star.coordinate_nu
    equiv = ogm_equiv([nu_star[3], nu_star[4]], [nu[3], nu[4]])
    prime = monomial_substitution(delta, example_blowup())
    prime_cls = classify(prime)
    return {
        "p": cls.p,
        "classification": cls.as_dict(),
        "delta_cut_level": delta.delta.cut_level,
        "nu_delta": jsonable(list(nu)),
        "nu_delta_quotient": jsonable([v.truncate(delta.delta.quotient_rank) for v in nu]),
        "star_images": [str(im) for im in star.images],
        "star_images_match": images_match,
        "y5_erratum": Y5_NOTE,
        "equiv_y4y5_vs_x4x5": equiv,
        "verify_prop31": verify_prop31(delta, example_chart).to_dict(),
        "phi_tilde": jsonable(phi_tilde_report(delta, example_chart)),
        "blowup": {
            "images": [str(im) for im in prime.images],
            "x5_prime_is_z": prime.image(5) == _mono(0, 0, -1, 0),
            "classification": prime_cls.as_dict(),
            "chart": sorted(example_blowup_chart),
            "verify_prop31": verify_prop31(prime, example_blowup_chart).to_dict(),
        },
    }
