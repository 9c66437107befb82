"""Exact real-spectrum charts: points given by series-valued coordinates, their
valuations and classifications, the coordinate-inversion charts and the
covering checks built on them."""

from .atlas import (
    USetDescriptor,
    partition_check,
    random_point,
    random_sample,
    theorem_check,
    u_membership,
)
from .charts import (
    MonomialMap,
    check_chart,
    chart_pullback,
    inverse_transform,
    monomial_substitution,
    phi_tilde_report,
    transform,
    valid_charts,
    verify_prop31,
)
from .errors import (
    ChartOnSupport,
    InvalidChart,
    MalformedDescriptor,
    NonIntegerSignedExponent,
    ParseError,
    RankMismatch,
    SchemaError,
    SperAtlasError,
    SupportObstruction,
    ZeroSeries,
)
from .hahn import HahnFraction, HahnPoly, SignData
from .lexgroups import (
    INF,
    ConvexSubgroup,
    LexVector,
    archimedean_bound,
    convex_hull,
    dominated,
    ogm_equiv,
    project_mod,
    q_lin_independent,
    rel_canonical_form,
    scalewise_independent,
)
from .parsing import parse_polynomial
from .points import (
    Classification,
    Point,
    Polynomial,
    classify,
    delta_subgroup,
    eval_poly,
    fine_valuation,
    in_support,
    is_finite_point,
    nu_delta,
    point_equal,
    poly_sign,
)
from .scalars import SQRT2, QuadExt, format_scalar, parse_scalar

__version__ = "0.1.0"
