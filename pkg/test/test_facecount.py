from test.common import random_abrow, random_generator_set, random_graph, random_nrow
from test.globals import SIX_BOUNDS, SIX_BOUNDS_EVEN, SIX_BOUNDS_ODD

import pytest

from iex.comp import comp_generators
from iex.exclusion import ab_algorithm, n_algorithm
from iex.facecount import (
    FaceVector,
    ParityWeightTable,
    row_face_polynomial,
    row_parity_weight_polynomial,
    union_face_numbers,
    union_parity_weight,
)
from iex.rows import RowUnion, TernaryRow, parse_row


#########################################
@pytest.mark.parametrize(
    "text, f",
    [
        (
            "0 1 2 2 2 n1 n1 n2 n2 n3 n3 n3 n3 n3",
            (0, 1, 12, 64, 200, 406, 559, 525, 325, 120, 20, 0, 0, 0, 0),
        ),
        ("b 2 a b 2 2 b", (1, 7, 18, 23, 16, 6, 1, 0)),
        ("n n n", (1, 3, 3, 0)),
        ("1 1 0", (0, 0, 1, 0)),
    ],
)
def test_row_face_polynomial(text, f):
    assert row_face_polynomial(parse_row(text)).f == f


def test_row_face_polynomial_type():
    with pytest.raises(TypeError):
        row_face_polynomial(TernaryRow((1, 2)))


@pytest.mark.parametrize("h", [4, 7])
def test_face_numbers_random_rows(test_face_numbers, rng, h):
    for _ in range(10):
        test_face_numbers(random_nrow(rng, h))
        test_face_numbers(random_abrow(rng, h))


def test_face_numbers_random_unions(test_face_numbers, rng):
    for _ in range(5):
        test_face_numbers(n_algorithm(random_generator_set(rng, 8, 6)))
        test_face_numbers(ab_algorithm(random_graph(rng, 8, 0.4)))


def test_face_vector():
    f = FaceVector((1, 6, 7, 1, 0))
    assert f.h == 4
    assert f.total() == 15
    assert f.even == {0: 1, 2: 7}
    assert f.odd == {1: 6, 3: 1}
    assert str(f) == "1 6 7 1 0"
    assert (f + FaceVector.zeros(4)) == f
    with pytest.raises(ValueError):
        f + FaceVector.zeros(3)
    with pytest.raises(ValueError):
        FaceVector((1, -1))


#########################################
@pytest.mark.parametrize(
    "text, w, c, d",
    [
        (
            "0 n1 n1 n1 n2 n2",
            (7, 4, 3, 3, 2, 2),
            {0: 1, 5: 4, 6: 3, 7: 2},
            {2: 2, 3: 2, 4: 1, 8: 2, 9: 4},
        ),
        ("1 0 0 0 n n", (7, 4, 3, 3, 2, 2), {9: 2}, {7: 1}),
        (
            "n n n n n",
            (2, 2, 2, 5, 5),
            {0: 1, 4: 3, 7: 6, 10: 1, 11: 2, 14: 3},
            {2: 3, 5: 2, 6: 1, 9: 6, 12: 3},
        ),
        ("a b b", (1, 2, 3), {0: 1, 5: 1}, {1: 1, 2: 1, 3: 1}),
    ],
)
def test_row_parity_weight(text, w, c, d):
    table = row_parity_weight_polynomial(parse_row(text), w)
    assert table.c == c
    assert table.d == d


def test_bounded_composition_table():
    rows = n_algorithm(comp_generators(SIX_BOUNDS))
    table = union_parity_weight(rows, SIX_BOUNDS.bounds)
    assert table.c == SIX_BOUNDS_EVEN
    assert table.d == SIX_BOUNDS_ODD
    assert table.total() == rows.cardinality() == 28
    assert table.weights == [0, 2, 3, 4, 5, 6, 7, 8, 9]


@pytest.mark.parametrize("h", [3, 6])
def test_parity_weights_random(test_parity_weights, rng, h):
    for _ in range(10):
        w = [rng.randint(0, 4) for _ in range(h)]
        test_parity_weights(random_nrow(rng, h), w)
        test_parity_weights(random_abrow(rng, h), w)
    w = [rng.randint(0, 4) for _ in range(8)]
    test_parity_weights(ab_algorithm(random_graph(rng, 8, 0.4)), w)


def test_unit_weights_match_face_numbers(rng):
    rows = n_algorithm(random_generator_set(rng, 7, 5))
    table = union_parity_weight(rows, [1] * 7)
    f = FaceVector(
        tuple(table.c.get(k, 0) + table.d.get(k, 0) for k in range(8))
    )
    assert f == union_face_numbers(rows)


def test_parity_weight_errors():
    r = parse_row("n n 2")
    with pytest.raises(ValueError):
        row_parity_weight_polynomial(r, (1, 2))
    with pytest.raises(ValueError):
        row_parity_weight_polynomial(r, (1, -2, 0))
    with pytest.raises(ValueError):
        ParityWeightTable({1: -1})
    empty = union_parity_weight(RowUnion(3, ()), (1, 1, 1))
    assert empty.total() == 0
    assert empty.weights == []
