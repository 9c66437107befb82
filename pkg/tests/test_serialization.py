import json

import pytest

from sper_atlas import serialization as ser
from sper_atlas.atlas import USetDescriptor, partition_check, random_sample, theorem_check
from sper_atlas.charts import verify_prop31
from sper_atlas.errors import MalformedDescriptor, SchemaError
from sper_atlas.lexgroups import INF, LexVector
from sper_atlas.parsing import parse_polynomial
from sper_atlas.points import point_equal
from sper_atlas.scalars import SQRT2
from sper_atlas.worked_example import example_point


def test_point_layout():
    data = ser.point_to_json(example_point())
    assert data["n"] == 5 and data["m"] == 4 and data["exponent_field"] == "Q"
    assert data["signs"] == [1, 1, 1, 1]
    assert data["images"][1] == {"num": [["1", ["0", "0", "0", "0"]], ["1", ["0", "1", "0", "0"]]], "den": [["1", ["0", "0", "0", "0"]]]}


def test_point_round_trip_is_byte_stable():
    for pt in random_sample(100, seed=5):
        text = ser.dumps(ser.point_to_json(pt))
        back = ser.point_from_json(json.loads(text))
        assert point_equal(back, pt)
        assert ser.dumps(ser.point_to_json(back)) == text


def test_bare_series_image_and_default_signs():
    pt = ser.point_from_json({"m": 1, "images": [[["2", ["1/2"]]], {"num": [["1", ["0"]]]}]})
    assert pt.n == 2 and pt.signs.axis_signs == (1,)
    assert pt.image(1).valuation() == LexVector(["1/2"])


def test_vectors_and_tuples():
    v = LexVector((1, SQRT2 - 1, 0))
    assert ser.vector_to_json(v) == ["1", "-1+sqrt2", "0"]
    assert ser.vector_from_json(ser.vector_to_json(v)) == v
    assert ser.vector_from_json("inf") is INF
    t = [LexVector((1, 0)), LexVector((0, -2))]
    assert ser.tuple_from_json(ser.tuple_to_json(t)) == t


def test_polynomial_round_trip():
    f = parse_polynomial("x1^2*x3 - 7/2", 3)
    data = ser.polynomial_to_json(f)
    assert data == {"n": 3, "text": f.to_text()}
    assert ser.polynomial_from_json(data) == f
    assert ser.polynomial_from_json("x2 + 1", 2) == parse_polynomial("x2 + 1", 2)


def test_descriptor_round_trip():
    d = USetDescriptor("aIFG*", {1}, {2}, {3}, chart={3}, anchor=(LexVector((0, 0)),) * 3 + (LexVector((1, 0)), LexVector((0, 1))))
    data = ser.descriptor_to_json(d)
    assert ser.descriptor_from_json(json.loads(ser.dumps(data))) == d
    with pytest.raises(MalformedDescriptor):
        ser.descriptor_from_json({"kind": "HT", "H": [1], "T": [1]})


def test_report_round_trip_is_byte_stable():
    pt = example_point()
    for rep in (verify_prop31(pt, {3}), theorem_check(pt, {3})):
        text = ser.dumps(ser.report_to_json(rep))
        back = ser.report_from_json(json.loads(text))
        assert ser.dumps(ser.report_to_json(back)) == text
    atlas = partition_check(random_sample(10, seed=1)).to_dict()
    assert json.loads(ser.dumps(atlas)) == atlas


def test_matrix_layout():
    assert ser.matrix_from_json([[1, 0], [1, 1]]) == [[1, 0], [1, 1]]


@pytest.mark.parametrize(
    "data",
    [
        [],
        {"m": 1},
        {"m": 0, "images": [[]]},
        {"m": 1, "images": []},
        {"m": 1, "n": 2, "images": [[]]},
        {"m": 1, "images": [[["1", ["1", "0"]]]]},
        {"m": 1, "images": [[[1.5, ["1"]]]]},
        {"m": 1, "images": [[["sqrt2", ["1"]]]]},
        {"m": 1, "images": [{"num": [], "den": []}]},
        {"m": 1, "signs": [1, 1], "images": [[]]},
        {"m": 1, "signs": [2], "images": [[]]},
        {"m": 1, "exponent_field": "Q", "images": [[["1", ["sqrt2"]]]]},
        {"m": 1, "exponent_field": "R", "images": [[]]},
    ],
)
def test_malformed_points(data):
    with pytest.raises(SchemaError):
        ser.point_from_json(data)


@pytest.mark.parametrize(
    "fn, data",
    [
        (ser.matrix_from_json, [[1, 0]]),
        (ser.matrix_from_json, [[1, 0.5], [0, 1]]),
        (ser.tuple_from_json, {"a": 1}),
        (ser.tuple_from_json, ["inf"]),
        (ser.vector_from_json, []),
        (ser.descriptor_from_json, {"I": [1]}),
        (ser.report_from_json, {}),
    ],
)
def test_malformed_other(fn, data):
    with pytest.raises(SchemaError):
        fn(data)
