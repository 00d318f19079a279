"""JSON round trips and schema validation."""

from fractions import Fraction

import pytest

from polywit.construct import reduce_step, witness_for_multilinear
from polywit.errors import CommutativityError, DimensionError
from polywit.matrices import Matrix
from polywit.polynomials import (
    AdmissiblePoly,
    MultilinearPoly,
    enumerate_partitions,
    expand_admissible,
    from_multilinear,
)
from polywit.randgen import random_admissible, random_trace_zero
from polywit.serialize import (
    admissible_from_json,
    admissible_to_json,
    marked_to_json,
    matrix_from_json,
    matrix_to_json,
    partitions_to_json,
    pcpoly_to_json,
    reduction_to_json,
    witness_from_json,
    witness_to_json,
)


def test_matrix_round_trip():
    m = Matrix([[Fraction(1, 2), 3], [-2, 0]])
    doc = matrix_to_json(m)
    assert doc == {"size": 2, "rows": [["1/2", "3"], ["-2", "0"]]}
    assert matrix_from_json(doc) == m


@pytest.mark.parametrize(
    "doc",
    [
        {"size": 2, "rows": [["1", "0"]]},
        {"size": 2, "rows": [["1", "0"], ["0"]]},
        {"size": 0, "rows": []},
        {"rows": [["1"]]},
        {"size": 1},
        {"size": "2", "rows": [["1", "0"], ["0", "1"]]},
    ],
)
def test_matrix_rejects_bad_shapes(doc):
    with pytest.raises(DimensionError):
        matrix_from_json(doc)


@pytest.mark.parametrize("entry", ["1.5", "x", "1/0", ""])
def test_matrix_rejects_bad_entries(entry):
    with pytest.raises(ValueError):
        matrix_from_json({"size": 1, "rows": [[entry]]})


def test_witness_round_trip():
    f = MultilinearPoly(2, {(1, 2): 1, (2, 1): -1})
    a = random_trace_zero(2, seed=4)
    s, w = witness_for_multilinear(f, a)
    doc = witness_to_json(w, a, True)
    assert doc["s"] == s
    assert set(doc["x"]) == {"1", "2"}
    assert doc["u"] == {}
    assert doc["verified"] is True
    assert doc["trace"] == [{"k": 0, "omegabar": [], "branch": "rewrite"}]
    w2, target2, verified2 = witness_from_json(doc)
    assert w2 == w
    assert w2.trace == w.trace
    assert target2 == a
    assert verified2 is True


def test_witness_rejects_missing_keys():
    with pytest.raises(DimensionError):
        witness_from_json({"s": 1, "x": {}, "u": {}})


def test_witness_rejects_bad_trace_shape():
    doc = {
        "s": 1,
        "x": {"1": {"size": 1, "rows": [["0"]]}},
        "u": {},
        "target": {"size": 1, "rows": [["0"]]},
        "verified": False,
        "trace": [{"k": 0}],
    }
    with pytest.raises(DimensionError):
        witness_from_json(doc)


def test_witness_rejects_noncommuting_u():
    doc = {
        "s": 2,
        "x": {"1": matrix_to_json(Matrix.identity(2))},
        "u": {
            "3": matrix_to_json(Matrix.unit(2, 1, 2)),
            "4": matrix_to_json(Matrix.unit(2, 2, 1)),
        },
        "target": matrix_to_json(Matrix.zeros(2)),
        "verified": False,
    }
    with pytest.raises(CommutativityError):
        witness_from_json(doc)


def test_admissible_round_trip():
    f = random_admissible(2, (3, 4), density=0.6, seed=2)
    records = admissible_to_json(f)
    assert all(set(r) == {"sigma", "parts", "coeff"} for r in records)
    assert admissible_from_json(records) == f


def test_admissible_from_json_merges_duplicates():
    records = [
        {"sigma": [1], "parts": [[2]], "coeff": "1/2"},
        {"sigma": [1], "parts": [[2]], "coeff": "1/2"},
    ]
    f = admissible_from_json(records)
    assert f.coeffs == {((1,), ((2,),)): Fraction(1)}


def test_admissible_rejects_empty_and_malformed():
    with pytest.raises(DimensionError):
        admissible_from_json([])
    with pytest.raises(DimensionError):
        admissible_from_json([{"sigma": [1]}])
    with pytest.raises(DimensionError):
        admissible_from_json(
            [
                {"sigma": [1], "parts": [[2]], "coeff": "1"},
                {"sigma": [1], "parts": [[3]], "coeff": "1"},
            ]
        )


def test_pcpoly_to_json_shape():
    f = AdmissiblePoly(1, (3,), {((1,), ((3,),)): 1})
    doc = pcpoly_to_json(expand_admissible(f))
    assert doc["n"] == 1 and doc["omega"] == [3]
    assert {tuple(t["xs"]) for t in doc["terms"]} == {(1,)}
    assert {t["coeff"] for t in doc["terms"]} == {"1", "-1"}


def test_reduction_to_json_shape():
    f = from_multilinear(MultilinearPoly(2, {(1, 2): 1, (2, 1): -1}))
    step = reduce_step(f)
    doc = reduction_to_json(step)
    assert doc["branch"] == "rewrite"
    assert doc["k"] == 0 and doc["omegabar"] == []
    assert doc["pi_of_g"] == []
    assert doc["rewritten"] == [
        {"sigma": [1], "parts": [[2]], "coeff": "-1"}
    ]
    assert doc["g"] == marked_to_json(step.marked)
    assert len(doc["g"]["terms"]) == 2


def test_partitions_to_json():
    doc = partitions_to_json(enumerate_partitions((3,), 2))
    assert doc == [[[3], []], [[], [3]]]
