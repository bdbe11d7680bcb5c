from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from geometry import (
    Point2,
    Segment,
    as_rational,
    format_rational,
    orientation,
    parse_rational,
    point_on_segment,
    segment_intersection,
    triangle_contains_strictly,
)
from utils import ConfigValidationError, OverlappingSegmentsError

coordinates = st.fractions(min_value=-4, max_value=4, max_denominator=9)
points = st.builds(Point2, coordinates, coordinates)


def seg(x1, y1, x2, y2):
    return Segment(Point2(x1, y1), Point2(x2, y2))


def test_parse_rational_reduces_and_strips():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational(" 2 ") == 2
    assert parse_rational('"1/3"') == Fraction(1, 3)
    assert parse_rational("-4/8") == Fraction(-1, 2)


@pytest.mark.parametrize("text", ["1/0", "abc", "", "1/2/3", "0.5"])
def test_parse_rational_rejects(text):
    with pytest.raises(ConfigValidationError):
        parse_rational(text)


def test_as_rational_refuses_floats_and_bools():
    with pytest.raises(ConfigValidationError):
        as_rational(0.5)
    with pytest.raises(ConfigValidationError):
        as_rational(True)
    assert as_rational("2/4") == Fraction(1, 2)


def test_format_rational():
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(Fraction(4, 2)) == "2"


def test_point_arithmetic_is_exact():
    p = Point2(0, 0).lerp(Point2(1, 0), "1/3")
    assert p == Point2(Fraction(1, 3), 0)
    assert Point2(1, 2) + Point2("1/2", 0) - Point2(0, 2) == Point2(Fraction(3, 2), 0)
    assert Point2(1, 3).scale(Fraction(1, 3)) == Point2(Fraction(1, 3), 1)
    assert str(Point2(Fraction(1, 2), 1)) == "(1/2, 1)"


def test_degenerate_segment_rejected():
    with pytest.raises(ConfigValidationError):
        seg(1, 1, 1, 1)


def test_orientation_and_strict_containment():
    a, b, c = Point2(0, 0), Point2(1, 0), Point2(0, 1)
    assert orientation(a, b, c) == 1
    assert orientation(a, c, b) == -1
    assert orientation(a, b, Point2(2, 0)) == 0
    assert triangle_contains_strictly(a, b, c, Point2(Fraction(1, 3), Fraction(1, 3)))
    assert not triangle_contains_strictly(a, b, c, Point2(Fraction(1, 2), 0))
    assert not triangle_contains_strictly(a, b, c, Point2(1, 1))


def test_crossing_segments():
    assert segment_intersection(seg(0, 0, 2, 2), seg(0, 2, 2, 0)) == Point2(1, 1)
    point = segment_intersection(seg(0, 0, 1, 1), seg(0, 1, 3, 0))
    assert point == Point2(Fraction(3, 4), Fraction(3, 4))


def test_touching_and_disjoint_segments():
    # shared endpoint
    assert segment_intersection(seg(0, 0, 1, 0), seg(1, 0, 1, 1)) == Point2(1, 0)
    # T-junction
    assert segment_intersection(seg(0, 0, 2, 0), seg(1, 0, 1, 5)) == Point2(1, 0)
    # lines cross outside the segments
    assert segment_intersection(seg(0, 0, 1, 0), seg(2, -1, 2, 1)) is None
    # parallel lines
    assert segment_intersection(seg(0, 0, 1, 0), seg(0, 1, 1, 1)) is None


def test_collinear_cases():
    assert segment_intersection(seg(0, 0, 1, 0), seg(1, 0, 2, 0)) == Point2(1, 0)
    assert segment_intersection(seg(0, 0, 1, 0), seg(2, 0, 3, 0)) is None
    with pytest.raises(OverlappingSegmentsError):
        segment_intersection(seg(0, 0, 2, 0), seg(1, 0, 3, 0))


def test_point_on_segment_closed():
    s = seg(0, 0, 2, 2)
    assert point_on_segment(Point2(0, 0), s)
    assert point_on_segment(Point2(1, 1), s)
    assert not point_on_segment(Point2(3, 3), s)
    assert not point_on_segment(Point2(1, 0), s)


def _intersect(s, t):
    try:
        return segment_intersection(s, t)
    except OverlappingSegmentsError:
        return "overlap"


@given(points, points, points, points)
def test_intersection_is_symmetric_and_lies_on_both(p1, q1, p2, q2):
    assume(p1 != q1 and p2 != q2)
    s, t = Segment(p1, q1), Segment(p2, q2)
    forward, backward = _intersect(s, t), _intersect(t, s)
    assert forward == backward
    if isinstance(forward, Point2):
        assert point_on_segment(forward, s)
        assert point_on_segment(forward, t)
