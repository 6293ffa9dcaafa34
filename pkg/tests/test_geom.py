import pytest
from hypothesis import given, settings, strategies as st

from rectcross.errors import CapacityError, CollinearPoints, DuplicatePoint
from rectcross.geom import (COORD_BOUND, ParseError, Point, PointSet, format_points,
                            orientation, parse_points, validate_general_position)
from rectcross.sampling import random_points

coord = st.integers(-COORD_BOUND, COORD_BOUND)
point = st.tuples(coord, coord)


def test_orientation_examples():
    assert orientation((0, 0), (1, 0), (0, 1)) == 1
    assert orientation((0, 0), (1, 0), (2, 0)) == 0
    assert orientation((0, 0), (0, 1), (1, 0)) == -1


@given(point, point, point)
def test_orientation_antisymmetric_and_cyclic(p, q, r):
    assert orientation(p, q, r) == -orientation(q, p, r)
    assert orientation(p, q, r) == orientation(q, r, p)


@given(st.tuples(*[st.integers(-2**20, 2**20)] * 6), st.integers(-2**20, 2**20),
       st.integers(-2**20, 2**20))
def test_orientation_translation_invariant(c, tx, ty):
    p, q, r = (c[0], c[1]), (c[2], c[3]), (c[4], c[5])
    shift = lambda a: (a[0] + tx, a[1] + ty)  # noqa: E731
    assert orientation(p, q, r) == orientation(shift(p), shift(q), shift(r))


def test_orientation_exact_at_capacity():
    b = COORD_BOUND
    # determinant is exactly -1 here; doubles would round it away
    assert orientation((-b, -b), (b, b - 1), (b - 1, b - 2)) == -1
    assert orientation((-b, -b), (b, b), (b - 1, b - 1)) == 0


def test_validate_examples():
    validate_general_position([(0, 0), (4, 0), (0, 4), (1, 2)])
    with pytest.raises(CollinearPoints) as e:
        validate_general_position([(0, 0), (1, 1), (2, 2)])
    assert set(e.value.points) == {(0, 0), (1, 1), (2, 2)}
    with pytest.raises(DuplicatePoint) as e:
        validate_general_position([(0, 0), (0, 0), (1, 2)])
    assert e.value.point == (0, 0)


@pytest.mark.parametrize("n", [5, 15, 16, 40])
def test_validate_reports_a_real_witness(backend, rng, n):
    S = random_points(n, rng, bound=1000)
    validate_general_position(S)
    a, b = S[0], S[1]
    bad = S.plus((2 * b.x - a.x, 2 * b.y - a.y))
    with pytest.raises(CollinearPoints) as e:
        validate_general_position(bad)
    assert orientation(*e.value.points) == 0
    assert len(set(e.value.points)) == 3


def test_validate_sorted_path_catches_vertical_triple(backend):
    pts = [(i, i * i) for i in range(1, 20)] + [(0, -100), (0, 100), (0, 7)]
    with pytest.raises(CollinearPoints) as e:
        validate_general_position(pts)
    assert orientation(*e.value.points) == 0


def test_pointset_rejects_out_of_range():
    with pytest.raises(CapacityError):
        PointSet([(COORD_BOUND + 1, 0)])
    PointSet([(COORD_BOUND, -COORD_BOUND)])


def test_pointset_edits():
    S = PointSet([(0, 0), (4, 0), (4, 4)])
    assert S.without((4, 0)).points == (Point(0, 0), Point(4, 4))
    assert S.replace((4, 0), (5, 1))[1] == (5, 1)
    assert S.plus((9, 9)).n == 4
    assert (4, 4) in S and (1, 1) not in S
    assert S.index((4, 4)) == 2


def test_parse_skips_comments_and_blanks():
    S = parse_points("# header\n\n 0 0\n4\t0\n  # more\n4 4\n")
    assert S.points == ((0, 0), (4, 0), (4, 4))


@pytest.mark.parametrize("text, line", [("0 0\n1\n", 2), ("0 0\n1 x\n", 2), ("1 2 3\n", 1),
                                        ("1.5 2\n", 1)])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as e:
        parse_points(text)
    assert e.value.lineno == line


@settings(max_examples=50)
@given(st.lists(point, unique=True, max_size=30))
def test_format_parse_round_trip(pts):
    S = PointSet(pts)
    assert parse_points(format_points(S)) == S
