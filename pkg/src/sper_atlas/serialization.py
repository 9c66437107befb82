"""JSON layouts for scalars, vectors, series, points, tuples, matrices,
descriptors and reports.  Every exact number is a string, never a float.

Layouts::

    scalar      "3", "-1/2", "1/2+3/4*sqrt2"
    LexVector   ["1", "0", "-1/2"]
    HahnPoly    [[coefficient, LexVector], ...]   sorted by exponent
    fraction    {"num": HahnPoly, "den": HahnPoly}   (a bare HahnPoly is read as den = 1)
    point       {"n", "m", "exponent_field": "Q" | "Qsqrt2", "signs": [1, -1, ...], "images": [fraction, ...]}
    polynomial  {"n": 3, "text": "x1^2*x3 - 7/2"}   (or just the text where n is known)
    tuple       [LexVector, ...]
    matrix      [[1, 0], [1, 1]]
    descriptor  {"kind", "I", "F", "G", "H", "T", "chart", "anchor"}   1-based indices, unused keys optional
    report      {"subject", "notes", "checks": [{"name" | "clause", "status", "witness"}]}
"""

from __future__ import annotations

import json

from .atlas import USetDescriptor
from .errors import SchemaError
from .hahn import HahnFraction, HahnPoly, SignData
from .lexgroups import INF, LexVector
from .parsing import parse_polynomial
from .points import Point, Polynomial
from .reports import Check, CheckReport, jsonable
from .scalars import format_rational, format_scalar, parse_scalar

__all__ = [
    "dumps",
    "vector_to_json",
    "vector_from_json",
    "hahn_to_json",
    "hahn_from_json",
    "fraction_to_json",
    "fraction_from_json",
    "point_to_json",
    "point_from_json",
    "polynomial_to_json",
    "polynomial_from_json",
    "tuple_to_json",
    "tuple_from_json",
    "matrix_from_json",
    "descriptor_to_json",
    "descriptor_from_json",
    "report_to_json",
    "report_from_json",
    "to_jsonable",
]


def dumps(obj):
    """Canonical text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _expect(cond, message):
    if not cond:
        raise SchemaError(message)


def _scalar(text):
    _expect(isinstance(text, (str, int)) and not isinstance(text, bool), f"scalar must be a string, got {text!r}")
    try:
        return parse_scalar(str(text))
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def vector_to_json(v):
    if v is INF:
        return "inf"
    return [format_scalar(c) for c in v.coords]


def vector_from_json(data):
    if data == "inf":
        return INF
    _expect(isinstance(data, list) and data, f"vector must be a non-empty array, got {data!r}")
    return LexVector([_scalar(c) for c in data])


def hahn_to_json(poly):
    return [[format_rational(c), vector_to_json(e)] for e, c in poly.sorted_terms()]


def hahn_from_json(data, m):
    _expect(isinstance(data, list), "series must be an array of [coefficient, exponent] pairs")
    terms = []
    for item in data:
        _expect(isinstance(item, list) and len(item) == 2, f"bad series term {item!r}")
        c = _scalar(item[0])
        _expect(c.is_rational(), f"series coefficients must be rational, got {item[0]!r}")
        e = vector_from_json(item[1])
        _expect(e is not INF and len(e) == m, f"exponent {item[1]!r} does not have rank {m}")
        terms.append((e, c.a))
    return HahnPoly(m, terms)


def fraction_to_json(frac):
    return {"num": hahn_to_json(frac.num), "den": hahn_to_json(frac.den)}


def fraction_from_json(data, m):
    if isinstance(data, list):
        return HahnFraction(hahn_from_json(data, m))
    _expect(isinstance(data, dict) and "num" in data, "image must be {num, den} or a series")
    num = hahn_from_json(data["num"], m)
    den = hahn_from_json(data.get("den", [["1", ["0"] * m]]), m)
    _expect(not den.is_zero(), "zero denominator")
    return HahnFraction(num, den)


def point_to_json(point):
    return {
        "n": point.n,
        "m": point.m,
        "exponent_field": point.exponent_field,
        "signs": list(point.signs.axis_signs),
        "images": [fraction_to_json(im) for im in point.images],
    }


def point_from_json(data):
    _expect(isinstance(data, dict), "point must be a JSON object")
    for key in ("m", "images"):
        _expect(key in data, f"point is missing {key!r}")
    m = data["m"]
    _expect(isinstance(m, int) and m >= 1, "m must be a positive integer")
    images = data["images"]
    _expect(isinstance(images, list) and images, "images must be a non-empty array")
    if "n" in data:
        _expect(data["n"] == len(images), f"n={data['n']} but {len(images)} images given")
    signs = data.get("signs", [1] * m)
    _expect(isinstance(signs, list) and len(signs) == m, f"signs must have {m} entries")
    try:
        return Point(
            tuple(fraction_from_json(im, m) for im in images),
            SignData(signs),
            data.get("exponent_field", "Q"),
        )
    except SchemaError:
        raise
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def polynomial_to_json(f):
    return {"n": f.n, "text": f.to_text()}


def polynomial_from_json(data, n=None):
    if isinstance(data, str):
        _expect(n is not None, "a bare expression needs the number of variables")
        return parse_polynomial(data, n)
    _expect(isinstance(data, dict) and "text" in data, "polynomial must be {n, text}")
    return parse_polynomial(data["text"], data.get("n", n))


def tuple_to_json(vectors):
    return [vector_to_json(v) for v in vectors]


def tuple_from_json(data):
    _expect(isinstance(data, list), "tuple must be an array of vectors")
    vectors = [vector_from_json(v) for v in data]
    _expect(all(v is not INF for v in vectors), "tuple entries must be finite")
    return vectors


def matrix_from_json(data):
    _expect(isinstance(data, list) and data, "matrix must be a non-empty array of rows")
    rows = []
    for row in data:
        _expect(isinstance(row, list) and len(row) == len(data), "matrix must be square")
        _expect(all(isinstance(x, int) and not isinstance(x, bool) for x in row), "matrix entries must be integers")
        rows.append(list(row))
    return rows


def descriptor_to_json(d):
    out = {"kind": d.kind}
    for name in ("I", "F", "G", "H", "T"):
        out[name] = sorted(getattr(d, name))
    if d.chart is not None:
        out["chart"] = sorted(d.chart)
    if d.anchor is not None:
        out["anchor"] = tuple_to_json(d.anchor)
    return out


def descriptor_from_json(data):
    _expect(isinstance(data, dict) and "kind" in data, "descriptor must be an object with a kind")
    sets = {}
    for name in ("I", "F", "G", "H", "T"):
        vals = data.get(name, [])
        _expect(isinstance(vals, list) and all(isinstance(j, int) for j in vals), f"{name} must be an index array")
        sets[name] = frozenset(vals)
    chart = data.get("chart")
    if chart is not None:
        chart = frozenset(chart)
    anchor = data.get("anchor")
    if anchor is not None:
        anchor = tuple(tuple_from_json(anchor))
    return USetDescriptor(data["kind"], chart=chart, anchor=anchor, **sets)


def report_to_json(report):
    return report.to_dict()


def report_from_json(data):
    _expect(isinstance(data, dict) and "checks" in data, "report must have checks")
    checks = data["checks"]
    key = "clause" if checks and "clause" in checks[0] else "name"
    rep = CheckReport(subject=data.get("subject", ""), notes=list(data.get("notes", [])), key=key)
    for c in checks:
        rep.checks.append(Check(c[key], c["status"], c.get("witness", {})))
    return rep


def to_jsonable(obj):
    """Point, polynomial, vector, series or report to plain JSON data."""
    if isinstance(obj, Point):
        return point_to_json(obj)
    if isinstance(obj, Polynomial):
        return polynomial_to_json(obj)
    if isinstance(obj, HahnFraction):
        return fraction_to_json(obj)
    if isinstance(obj, HahnPoly):
        return hahn_to_json(obj)
    if isinstance(obj, CheckReport):
        return obj.to_dict()
    return jsonable(obj)
