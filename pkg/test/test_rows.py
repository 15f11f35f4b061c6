from test.common import random_abrow, random_nrow

import pytest

from iex.rows import (
    ABRow,
    Face,
    NRow,
    RowUnion,
    TernaryRow,
    as_face,
    check_disjoint,
    parse_row,
    ternary_intersect,
)


#########################################
@pytest.mark.parametrize(
    "text, cardinality",
    [
        ("2 2 2", 8),
        ("0 n1 n1 n1 n2 n2", 21),
        ("1 0 0 0 n n", 3),
        ("n1 n1 n2 n2 n2 1", 21),
        ("0 1 2 2 2 n1 n1 n2 n2 n3 n3 n3 n3 n3", 2232),
        ("b 2 a b 2 2 b", 72),
        ("a1 b1 b1 a2 b2 0", 15),
    ],
)
def test_row_cardinality(text, cardinality):
    r = parse_row(text)
    assert r.cardinality() == cardinality
    assert sum(1 for _ in r.enumerate()) == cardinality


def test_single_cell_bubble_is_zero():
    assert NRow(3, bubbles=(frozenset({2}),)) == NRow(3, zeros=frozenset({2}))
    assert parse_row("2 n 1").render() == "2 0 1"


def test_nrow_render():
    r = parse_row("n2 n2 0 n1 n1 n1")
    # bubbles are renumbered by their first position
    assert r.render() == "n1 n1 0 n2 n2 n2"
    assert str(r) == r.render()
    assert r.twos == frozenset()
    assert r.bubble_of(4) == frozenset({4, 5, 6})
    assert r.bubble_of(3) is None


def test_nrow_contains():
    r = parse_row("1 n n 2")
    assert r.contains({1})
    assert r.contains({1, 2, 4})
    assert not r.contains({1, 2, 3})
    assert not r.contains({2})
    assert r.contains((1, 0, 1, 1))
    assert not r.contains((1, 1, 1, 0))


@pytest.mark.parametrize("h", [1, 3, 5, 6])
def test_random_nrow_family(test_union_is_family, rng, h):
    for _ in range(10):
        r = random_nrow(rng, h)
        test_union_is_family(
            r,
            lambda u: r.ones <= u
            and not r.zeros & u
            and not any(b <= u for b in r.bubbles),
        )


@pytest.mark.parametrize("h", [2, 4, 6])
def test_random_abrow_family(test_union_is_family, rng, h):
    for _ in range(10):
        r = random_abrow(rng, h)
        test_union_is_family(
            r,
            lambda u: r.ones <= u
            and not r.zeros & u
            and not any(a in u and b & u for a, b in r.wildcards),
        )


def test_abrow_wildcard_cells():
    r = parse_row("b 2 a b 2 2 b")
    assert r == ABRow(7, wildcards=((3, frozenset({1, 4, 7})),))
    assert r.render() == "b1 2 a1 b1 2 2 b1"
    assert r.labeled == frozenset({1, 3, 4, 7})
    assert r.twos == frozenset({2, 5, 6})
    assert r.contains({3, 2})
    assert r.contains({1, 4, 7})
    assert not r.contains({3, 7})


def test_abrow_enumeration_order():
    r = ABRow(2, wildcards=((1, frozenset({2})),))
    assert [sorted(u) for u in r.enumerate()] == [[], [2], [1]]


@pytest.mark.parametrize("h", [3, 5])
def test_abrow_expand(test_union_is_family, rng, h):
    for _ in range(10):
        r = random_abrow(rng, h)
        expanded = RowUnion(h, tuple(r.expand()))
        assert all(isinstance(x, NRow) for x in expanded)
        assert len(expanded) == 2 ** len(r.wildcards)
        test_union_is_family(expanded, r.contains)


@pytest.mark.parametrize("h", [3, 5])
def test_abrow_assign(rng, h):
    for _ in range(10):
        r = random_abrow(rng, h)
        for pos in range(1, h + 1):
            for value in (0, 1):
                fixed = r.assign(pos, value)
                expected = {
                    u for u in r.enumerate() if (pos in u) == bool(value)
                }
                if fixed is None:
                    assert not expected
                else:
                    assert set(fixed.enumerate()) == expected


def test_parse_row_errors():
    with pytest.raises(ValueError, match="cannot mix"):
        parse_row("n n a b")
    with pytest.raises(ValueError, match="no b-positions"):
        parse_row("a1 2 2")
    with pytest.raises(ValueError, match="without an a-position"):
        parse_row("a1 b1 b2")
    with pytest.raises(ValueError, match="a-positions"):
        parse_row("a1 a1 b1")
    with pytest.raises(ValueError, match="Invalid row token"):
        parse_row("1 x 2")


def test_overlapping_labels_rejected():
    with pytest.raises(ValueError, match="more than one label"):
        NRow(3, ones=frozenset({1}), zeros=frozenset({1}))
    with pytest.raises(ValueError, match="outside"):
        ABRow(3, wildcards=((1, frozenset({4})),))
    with pytest.raises(ValueError, match="Empty n-bubble"):
        NRow(3, bubbles=(frozenset(),))


#########################################
def test_ternary_intersect():
    p = TernaryRow((2, 1, 2, 2, 0, 1))
    q = TernaryRow((1, 1, 0, 2, 2, 2))
    assert ternary_intersect(p, q) == TernaryRow((1, 1, 0, 2, 0, 1))
    assert TernaryRow((1, 2)).intersect(TernaryRow((0, 2))) is None
    with pytest.raises(ValueError):
        p.intersect(TernaryRow((2, 2)))


@pytest.mark.parametrize(
    "cells, k, expected",
    [
        ((1, 1, 0, 2, 0, 1), 3, 1),
        ((1, 1, 0, 2, 0, 1), 4, 1),
        ((1, 1, 0, 2, 0, 1), 2, 0),
        ((2, 1, 0, 0, 2, 2), 3, 3),
        ((2, 2, 2, 2), 2, 6),
    ],
)
def test_ternary_card_k(cells, k, expected):
    assert TernaryRow(cells).card_k(k) == expected


def test_ternary_parse():
    r = TernaryRow.parse("(2,1,0)")
    assert r.cells == (2, 1, 0)
    assert r.ones_mask == 0b010
    assert r.zeros_mask == 0b100
    assert r.cardinality() == 2
    with pytest.raises(ValueError, match="Invalid ternary cell"):
        TernaryRow((0, 3))


#########################################
def test_face_checks():
    assert Face({1, 3}, 3).bits == (1, 0, 1)
    assert Face.from_bits((0, 1, 1)) == {2, 3}
    with pytest.raises(ValueError):
        Face({4}, 3)
    with pytest.raises(ValueError):
        as_face((1, 0), 3)
    with pytest.raises(ValueError):
        as_face(Face({1}, 2), 3)


def test_check_disjoint():
    disjoint = RowUnion(3, (parse_row("0 2 2"), parse_row("1 n n")))
    assert check_disjoint(disjoint)
    assert check_disjoint(disjoint, brute=True)
    overlapping = RowUnion(3, (parse_row("2 2 0"), parse_row("1 2 2")))
    assert not check_disjoint(overlapping)
    assert not check_disjoint(overlapping, brute=True)
    mixed = RowUnion(3, (parse_row("a b 2"), parse_row("1 1 1")))
    assert check_disjoint(mixed)
    with pytest.raises(ValueError):
        check_disjoint(RowUnion(3, ()), brute=True, max_h=2)


def test_union_length_mismatch():
    with pytest.raises(ValueError):
        RowUnion(3, (NRow.full(4),))
