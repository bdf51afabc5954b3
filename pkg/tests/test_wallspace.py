import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import separating
from wallcube.corpus import random_wallspace
from wallcube.errors import (
    EmptyPointSet,
    InvalidPoint,
    InvalidWall,
    NonComplementarySides,
    TrivialWallQuery,
    UnseparatedPair,
)
from wallcube.io import export_wallspace, parse_wallspace
from wallcube.wallspace import from_sides, separating_walls, validate, wall_metric, walls_cross


def test_fixture_encodings(PT, P3, HEX6):
    assert [(w.side0, w.side1) for w in PT.walls] == [(1, 0)]
    # side0 holds point 0; trivial wall first
    assert [(w.side0, w.side1) for w in P3.walls] == [(0b111, 0), (0b001, 0b110), (0b011, 0b100)]
    assert [w.side0 for w in HEX6.walls] == [0b111111, 0b000111, 0b110001, 0b100011]


def test_validate_point():
    report = validate(["p"], [])
    assert report.ok
    assert report.notes == ["trivial wall inserted"]
    assert report.space.w == 1


def test_validate_non_complementary():
    # HEX6 with point 5 missing from W1's second side
    walls = [
        ({0, 1, 2, 3, 4, 5}, set()),
        ({0, 1, 2}, {3, 4}),
        ({1, 2, 3}, {4, 5, 0}),
        ({2, 3, 4}, {5, 0, 1}),
    ]
    report = validate(6, walls)
    assert not report.ok
    (v,) = report.violations
    assert isinstance(v, NonComplementarySides) and v.wall == 1


def test_validate_overlapping_sides():
    report = validate(3, [({0, 1}, {1, 2})])
    assert isinstance(report.violations[0], NonComplementarySides)


def test_validate_unseparated():
    report = validate(["a", "b"], [({0, 1}, set())])
    assert not report.ok
    (v,) = report.violations
    assert isinstance(v, UnseparatedPair) and v.pair == ("a", "b")
    with pytest.raises(UnseparatedPair):
        report.raise_first()


def test_validate_empty():
    with pytest.raises(EmptyPointSet):
        validate([], []).raise_first()


def test_duplicates_removed_with_note():
    report = validate(["a", "b", "c"], [({0}, {1, 2}), ({1, 2}, {0}), ({0, 1}, {2})])
    assert report.ok
    assert report.space.w == 3
    assert any("duplicate" in n for n in report.notes)


def test_empty_nontrivial_side_collapses_into_trivial():
    report = validate(2, [(set(), {0, 1}), ({0}, {1})])
    assert report.ok and report.space.w == 2
    assert "trivial wall inserted" not in report.notes


def test_separating_walls_examples(HEX6, P3):
    assert separating_walls(HEX6, 0, 3) == {1, 2, 3}
    assert separating_walls(P3, "a", "b") == {1}
    for x in range(HEX6.n):
        assert separating_walls(HEX6, x, x) == frozenset()


def test_wall_metric_examples(HEX6, P3):
    assert wall_metric(HEX6, 0, 3) == 3
    assert wall_metric(HEX6, 0, 1) == 1
    assert wall_metric(P3, "a", "c") == 2


def test_invalid_point(P3):
    with pytest.raises(InvalidPoint):
        separating_walls(P3, "a", "z")
    with pytest.raises(InvalidPoint):
        wall_metric(P3, 0, 3)


def test_walls_cross_examples(HEX6, P3):
    assert walls_cross(HEX6, 1, 2)
    assert walls_cross(HEX6, 2, 3)
    assert not walls_cross(P3, 1, 2)
    with pytest.raises(TrivialWallQuery):
        walls_cross(HEX6, 0, 1)
    with pytest.raises(InvalidWall):
        walls_cross(HEX6, 1, 7)


def test_walls_cross_four_quadrants(HEX6):
    a, b = HEX6.walls[1], HEX6.walls[2]
    quads = sorted(s & t for s in (a.side0, a.side1) for t in (b.side0, b.side1))
    assert sorted(quads) == sorted([0b000110, 0b000001, 0b001000, 0b110000])


@st.composite
def spaces(draw):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_wallspace(random.Random(seed))


@settings(max_examples=150, deadline=None)
@given(spaces())
def test_metric_axioms(space):
    pts = range(space.n)
    for x, y in product(pts, pts):
        sw = separating_walls(space, x, y)
        assert sw == separating_walls(space, y, x)
        assert 0 not in sw
        assert sw == separating(space, x, y)
        assert (len(sw) == 0) == (x == y)
        for z in pts:
            assert sw <= separating_walls(space, x, z) | separating_walls(space, z, y)
            assert wall_metric(space, x, y) <= wall_metric(space, x, z) + wall_metric(space, z, y)


@settings(max_examples=150, deadline=None)
@given(spaces())
def test_export_reparse_is_bit_identical(space):
    again = parse_wallspace(export_wallspace(space))
    assert again == space
    assert [(w.side0, w.side1) for w in again.walls] == [(w.side0, w.side1) for w in space.walls]


def test_from_sides_matches_fixture(P3):
    assert from_sides(["a", "b", "c"], [{0}, {0, 1}]) == P3
