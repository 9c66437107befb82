"""
Comparing marked tuples of lex vectors
======================================

Two tuples are equivalent when the same integer combinations are positive,
zero and negative.  A canonical list of linear sign forms, one per
archimedean level, decides this without enumerating combinations.
"""

from sper_atlas import LexVector, ogm_equiv, q_lin_independent, rel_canonical_form, scalewise_independent
from sper_atlas.lexgroups import realized_levels
from sper_atlas.scalars import SQRT2


def V(*xs):
    return LexVector(xs)


a = [V(1, 0), V(1, 0)]
b = [V(1, 0, 0, 0), V(1, 0, -1, 0)]
print("sign forms of a:", rel_canonical_form(a).to_strings())
print("sign forms of b:", rel_canonical_form(b).to_strings())
print("a ~ b:", ogm_equiv(a, b))

###############################################################################
# Scaling and embedding into a larger group preserve the class.
print(ogm_equiv([V(1), V(2)], [V(3), V(6)]))
print(ogm_equiv([V(1, -2), V(0, 3)], [V(2, 0, -4), V(0, 5, 6)]))

###############################################################################
# Q-independence is weaker than independence within each level.
for t in ([V(1, 0), V(0, 1)], [V(1, 0), V(1, 1)], [V(1, 0), V(SQRT2, 0)]):
    print(
        [str(v) for v in t],
        "levels", realized_levels(t),
        "Q-independent", q_lin_independent(t),
        "scalewise", scalewise_independent(t),
    )
