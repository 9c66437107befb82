"""
A five-coordinate point and its charts
======================================

Build a point whose coordinates are Hahn series in four variables, split the
coordinates by size, invert the infinite one, and look at how the valuations
before and after the chart compare.
"""

from sper_atlas import (
    classify,
    monomial_substitution,
    ogm_equiv,
    parse_polynomial,
    poly_sign,
    transform,
    valid_charts,
    verify_prop31,
)
from sper_atlas.worked_example import Y5_NOTE, example_blowup, example_point

# The images of x1..x5.  x3 is infinite, x1 infinitesimal, x2 a unit.
delta = example_point()
print(delta)

cls = classify(delta)
print("I, F, G, P =", sorted(cls.I), sorted(cls.F), sorted(cls.G), sorted(cls.P))
print("kernel cut level:", cls.delta_kernel.cut_level)

###############################################################################
# Signs are exact.  x3 exceeds every integer, x1 is below every 1/N, and the
# binomial x5 - x3*x4 vanishes at the point.
for text in ("x3 - 1000000", "x1 - 1/1000000", "x5 - x3*x4"):
    print(f"sign({text}) =", poly_sign(delta, parse_polynomial(text, 5)))

###############################################################################
# Valid charts must invert every infinite coordinate and may invert units.
charts = valid_charts(cls)
print("valid charts:", [sorted(T) for T in charts])

star = transform(delta, charts[0])
for j, im in enumerate(star.images, 1):
    print(f"y{j} ->", im)
print(Y5_NOTE)

###############################################################################
# Compare the charted valuation with the coarse one.  Clause 7 is skipped here:
# x4 and x5 have the same coarse value, so the tail is not Q-independent.
rep = verify_prop31(delta, charts[0])
for c in rep.checks:
    print(c.name, c.status, c.witness.get("reason", ""))

tail_star = [star.coordinate_nu[3], star.coordinate_nu[4]]
tail = [delta.coordinate_nu[3], delta.coordinate_nu[4]]
print("tails equivalent:", ogm_equiv(tail_star, tail))

###############################################################################
# The substitution x5 -> x4' x5' separates the two values.  x5' becomes
# infinite, so the smallest chart now inverts x3 and x5, and every clause passes.
blown = monomial_substitution(delta, example_blowup())
print("x5' ->", blown.image(5))
cls2 = classify(blown)
T2 = valid_charts(cls2)[0]
print("chart after substitution:", sorted(T2))
print([(c.name, c.status) for c in verify_prop31(blown, T2).checks])
