from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ordinary import (
    AffineMap2,
    DegenerateLine,
    IdenticalLines,
    Point2,
    Side,
    WitnessOnLine,
    base_frame,
    canonical_line,
    intersect_lines,
    parse_scalar,
    side_of_line,
)
from ordinary.geometry import format_scalar, line_through, to_scalar

from util import x_eq, y_eq

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
nonzero = rationals.filter(lambda q: q != 0)


@pytest.mark.parametrize("raw, want", [
    ((2, 0, 4), (1, 0, 2)),
    ((0, -3, 6), (0, 1, -2)),
    ((Fraction(1, 2), Fraction(1, 3), 1), (3, 2, 6)),
])
def test_canonical_line_examples(raw, want):
    assert canonical_line(*raw).key == want


def test_canonical_line_rejects_zero_direction():
    with pytest.raises(DegenerateLine):
        canonical_line(0, 0, 1)


@given(rationals, rationals, rationals, nonzero)
def test_canonical_form_constant_on_locus(a, b, c, s):
    if a == 0 and b == 0:
        return
    l = canonical_line(a, b, c)
    assert canonical_line(s * a, s * b, s * c) == l
    assert canonical_line(l.a, l.b, l.c) == l


def test_parallel_lines_with_different_primitive_triples():
    # both triples are primitive, yet the lines are parallel
    l1 = canonical_line(2, 4, 5)
    l2 = canonical_line(1, 2, 3)
    assert l1.is_parallel(l2)
    assert l1.direction_key == l2.direction_key
    assert intersect_lines(l1, l2) is None


@pytest.mark.parametrize("l1, l2, want", [
    (x_eq(0), y_eq(0, 0), Point2(0, 0)),
    (canonical_line(1, 1, 2), canonical_line(1, -1, 0), Point2(1, 1)),
    (x_eq(0), x_eq(1), None),
])
def test_intersect_lines_examples(l1, l2, want):
    assert intersect_lines(l1, l2) == want


def test_intersect_identical_lines_raises():
    with pytest.raises(IdenticalLines):
        intersect_lines(canonical_line(1, 2, 3), canonical_line(2, 4, 6))


@given(rationals, rationals, rationals, rationals, rationals, rationals)
def test_intersection_lies_on_both(a1, b1, c1, a2, b2, c2):
    if (a1, b1) == (0, 0) or (a2, b2) == (0, 0):
        return
    l1, l2 = canonical_line(a1, b1, c1), canonical_line(a2, b2, c2)
    if l1 == l2:
        return
    p = intersect_lines(l1, l2)
    if p is not None:
        assert side_of_line(l1, p) is Side.ON
        assert side_of_line(l2, p) is Side.ON


@pytest.mark.parametrize("p, want", [
    (Point2(3, 1), Side.POSITIVE),
    (Point2(5, 0), Side.ON),
    (Point2(0, -2), Side.NEGATIVE),
])
def test_side_of_x_axis(p, want):
    assert side_of_line(y_eq(0), p) is want


def test_base_frame_identity_and_reflection():
    axis = y_eq(0)
    assert base_frame(axis, Point2(0, 1)).is_identity()
    flip = base_frame(axis, Point2(0, -1))
    assert flip(Point2(3, 2)) == Point2(3, -2)
    assert flip(Point2(-1, 5)) == Point2(-1, -5)


def test_base_frame_of_vertical_line():
    frame = base_frame(x_eq(0), Point2(1, 0))
    assert frame.apply_line(x_eq(0)).key == y_eq(0).key
    assert frame(Point2(1, 0)).y > 0
    for y in (-2, 0, 7):
        assert frame(Point2(0, y)).y == 0


def test_base_frame_witness_on_line():
    with pytest.raises(WitnessOnLine):
        base_frame(y_eq(0), Point2(4, 0))


@given(rationals, rationals, rationals, rationals, rationals,
       st.lists(st.tuples(rationals, rationals), min_size=1, max_size=100))
def test_base_frame_exactly_invertible(a, b, c, wx, wy, pts):
    if (a, b) == (0, 0):
        return
    l0 = canonical_line(a, b, c)
    w = Point2(wx, wy)
    if side_of_line(l0, w) is Side.ON:
        return
    frame = base_frame(l0, w)
    back = frame.inverse()
    assert frame(w).y > 0
    for x, y in pts:
        p = Point2(x, y)
        assert back(frame(p)) == p
        assert (frame(p).y == 0) == (side_of_line(l0, p) is Side.ON)


def test_apply_line_matches_point_map():
    m = AffineMap2(Fraction(2), Fraction(1), Fraction(-1), Fraction(3), Fraction(5), Fraction(-2))
    l = line_through(Point2(0, 1), Point2(2, 3))
    image = m.apply_line(l)
    for p in (Point2(0, 1), Point2(2, 3), Point2(-4, -3)):
        assert image.contains(m(p))


def test_scalar_parsing():
    assert parse_scalar("3/2") == Fraction(3, 2)
    assert parse_scalar(" -7 ") == -7
    assert format_scalar(Fraction(-6, 4)) == "-3/2"
    for bad in ("1.5", "1e3", "2/0", "x"):
        with pytest.raises(ValueError):
            parse_scalar(bad)
    with pytest.raises(TypeError):
        to_scalar(0.5)
