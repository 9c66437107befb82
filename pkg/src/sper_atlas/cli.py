"""Command-line front end.  Machine output is JSON on stdout, messages go to stderr.

Exit status: 0 on success, 1 when a check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import serialization as ser
from .atlas import partition_check, random_sample, theorem_check, u_membership
from .charts import (
    check_chart,
    inverse_transform,
    monomial_substitution,
    phi_tilde_report,
    transform,
    valid_charts,
    verify_prop31,
)
from .errors import SperAtlasError
from .lexgroups import (
    INF,
    ogm_equiv,
    project_mod,
    q_lin_independent,
    realized_levels,
    rel_canonical_form,
    scalewise_independent,
)
from .parsing import parse_polynomial
from .points import classify, fine_valuation, is_finite_point, poly_sign
from .reports import jsonable

SEED_ENV = "SPER_ATLAS_SEED"


class _Failed(Exception):
    """Raised by a command whose checks did not all pass (exit status 1)."""


def _load_json(path):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _load_point(path):
    return ser.point_from_json(_load_json(path))


def _index_set(text):
    text = text.strip()
    if not text:
        return frozenset()
    try:
        return frozenset(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated indices, got {text!r}") from None


def _emit(obj):
    sys.stdout.write(ser.dumps(obj))


def _say(text):
    print(text, file=sys.stderr)


def _chart_for(point, T):
    cls = classify(point)
    if T is None:
        return cls, valid_charts(cls)[0]
    return cls, check_chart(cls, T)


def cmd_classify(args):
    point = _load_point(args.point)
    cls = classify(point)
    _emit(
        {
            "classification": cls.as_dict(),
            "p": cls.p,
            "finite": is_finite_point(point),
            "delta_cut_level": cls.delta_kernel.cut_level,
            "valid_charts": [sorted(T) for T in valid_charts(cls)],
        }
    )
    _say(f"I={sorted(cls.I)} F={sorted(cls.F)} G={sorted(cls.G)} P={sorted(cls.P)}")


def cmd_value(args):
    point = _load_point(args.point)
    f = parse_polynomial(args.expr, point.n)
    fine = fine_valuation(point, f)
    delta = point.delta
    _emit(
        {
            "polynomial": f.to_text(),
            "fine_value": ser.vector_to_json(fine),
            "nu_delta": ser.vector_to_json(project_mod(fine, delta)),
            "nu_delta_quotient": ser.vector_to_json(
                fine if fine is INF else fine.truncate(delta.quotient_rank)
            ),
        }
    )


def cmd_sign(args):
    point = _load_point(args.point)
    f = parse_polynomial(args.expr, point.n)
    _emit({"polynomial": f.to_text(), "sign": poly_sign(point, f)})


def cmd_transform(args):
    point = _load_point(args.point)
    fn = transform if args.command == "transform" else inverse_transform
    _emit(ser.point_to_json(fn(point, args.T)))


def cmd_equiv(args):
    a = ser.tuple_from_json(_load_json(args.a))
    b = ser.tuple_from_json(_load_json(args.b))
    eq = ogm_equiv(a, b)
    _emit(
        {
            "equivalent": eq,
            "relations_a": rel_canonical_form(a).to_strings(),
            "relations_b": rel_canonical_form(b).to_strings(),
        }
    )
    _say("equivalent" if eq else "not equivalent")


def cmd_scalewise(args):
    vs = ser.tuple_from_json(_load_json(args.tuple))
    _emit(
        {
            "scalewise_independent": scalewise_independent(vs),
            "q_independent": q_lin_independent(vs),
            "levels": realized_levels(vs),
        }
    )


def cmd_verify(args):
    point = _load_point(args.point)
    _, T = _chart_for(point, args.T)
    rep = verify_prop31(point, T)
    out = rep.to_dict()
    out["phi_tilde"] = jsonable(phi_tilde_report(point, T))
    _emit(out)
    for c in rep.checks:
        _say(f"clause {c.name}: {c.status}")
    if not rep.ok:
        raise _Failed


def cmd_atlas(args):
    point = _load_point(args.point)
    d = ser.descriptor_from_json(_load_json(args.descriptor))
    tested = point
    if d.starred and d.chart is not None:
        tested = transform(point, d.chart)
    out = {"descriptor": ser.descriptor_to_json(d), "member": u_membership(tested, d)}
    if args.T is not None:
        rep = theorem_check(point, args.T, anchor=d.anchor)
        out["theorem_check"] = rep.to_dict()
        _emit(out)
        if not rep.ok:
            raise _Failed
        return
    _emit(out)


def _default_seed():
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise SperAtlasError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def cmd_partition(args):
    seed = args.seed if args.seed is not None else _default_seed()
    pts = random_sample(args.samples, seed, args.n, args.m, args.field, args.density)
    rep = partition_check(pts, workers=args.workers)
    out = rep.to_dict()
    out["seed"] = seed
    if not args.verbose:
        out["points"] = [p for p in out["points"] if any(c["status"] == "fail" for c in p["checks"])]
    _emit(out)
    _say(f"{len(pts)} points, {rep.violations} violations")
    if not rep.ok:
        raise _Failed


def cmd_blowup(args):
    point = _load_point(args.point)
    E = ser.matrix_from_json(_load_json(args.matrix))
    _emit(ser.point_to_json(monomial_substitution(point, E)))


def cmd_example(args):
    from .worked_example import example_report

    rep = example_report()
    _emit(rep)
    _say(f"classification {rep['classification']}, p = {rep['p']}")
    _say(f"equivalence of (y4, y5) and (x4, x5) values: {rep['equiv_y4y5_vs_x4x5']}")
    _say(f"note: {rep['y5_erratum']}")
    ok = (
        all(rep["star_images_match"])
        and rep["blowup"]["x5_prime_is_z"]
        and not any(c["status"] == "fail" for c in rep["verify_prop31"]["checks"])
        and not any(c["status"] == "fail" for c in rep["blowup"]["verify_prop31"]["checks"])
    )
    if not ok:
        raise _Failed


def build_parser():
    p = argparse.ArgumentParser(
        prog="sper-atlas",
        description="Exact computations with real-spectrum points given as series-valued coordinates.",
        epilog=f"Points, tuples, matrices and descriptors are JSON files ('-' reads stdin). "
        f"{SEED_ENV} sets the default sampling seed.",
    )
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    s = sub.add_parser("classify", help="split coordinates into I, F, G, P")
    s.add_argument("point")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("value", help="fine and coarse value of a polynomial")
    s.add_argument("point")
    s.add_argument("expr")
    s.set_defaults(func=cmd_value)

    s = sub.add_parser("sign", help="sign of a polynomial at the point")
    s.add_argument("point")
    s.add_argument("expr")
    s.set_defaults(func=cmd_sign)

    for name, text in (("transform", "invert the coordinates in T"), ("inverse-transform", "undo a chart")):
        s = sub.add_parser(name, help=text)
        s.add_argument("point")
        s.add_argument("--T", type=_index_set, required=True, help="comma-separated 1-based indices")
        s.set_defaults(func=cmd_transform)

    s = sub.add_parser("equiv", help="compare two marked tuples")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("scalewise", help="scalewise independence of a tuple")
    s.add_argument("tuple")
    s.set_defaults(func=cmd_scalewise)

    s = sub.add_parser("verify-prop31", help="check the chart valuation relations")
    s.add_argument("point")
    s.add_argument("--T", type=_index_set, default=None, help="chart (default: the smallest valid one)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("atlas", help="membership in a chart-domain set")
    s.add_argument("point")
    s.add_argument("--descriptor", required=True)
    s.add_argument("--T", type=_index_set, default=None, help="also run the transfer checks for this chart")
    s.set_defaults(func=cmd_atlas)

    s = sub.add_parser("partition-check", help="covering checks on seeded random points")
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--n", type=int, default=None)
    s.add_argument("--m", type=int, default=None)
    s.add_argument("--field", choices=("Q", "Qsqrt2"), default=None)
    s.add_argument("--density", type=float, default=0.5)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--verbose", action="store_true", help="include passing points in the output")
    s.set_defaults(func=cmd_partition)

    s = sub.add_parser("blowup", help="apply a unimodular monomial substitution")
    s.add_argument("point")
    s.add_argument("matrix")
    s.set_defaults(func=cmd_blowup)

    s = sub.add_parser("example-paper", help="reproduce the five-coordinate worked example")
    s.set_defaults(func=cmd_example)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        args.func(args)
    except _Failed:
        return 1
    except (SperAtlasError, ValueError, OSError, json.JSONDecodeError, argparse.ArgumentTypeError) as exc:
        _say(f"error: {exc}")
        return 2
    return 0


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
