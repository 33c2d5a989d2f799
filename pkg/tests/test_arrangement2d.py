from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ordinary import (
    AllConcurrent,
    AllParallel,
    NotAnArrangement,
    Point2,
    base_frame,
    bundles_on_base,
    find_ordinary_point_2d,
    find_triple,
    intersect_lines,
    lowest_candidate,
)
from ordinary.arrangement2d import LOWEST_X, PARALLEL_Y, TRIVIAL_GRID
from ordinary.generators import GenSpec, generate
from ordinary.oracle import incidences, lowest_crossing_above

from util import numbered, x_eq, y_eq

AXIS_FRAME = base_frame(y_eq(0), Point2(0, 1))


def test_find_triple_generic():
    assert find_triple([y_eq(0), y_eq(1), y_eq(-1, 2)]) == (0, 1, 2)


def test_find_triple_two_families_and_pencil():
    assert find_triple([x_eq(0), x_eq(1), y_eq(0), y_eq(0, 1)]) is None
    assert find_triple([y_eq(1), y_eq(-1), y_eq(2)]) is None


def _valid_triple(lines, t):
    a, b, c = (lines[i] for i in t)
    if a.is_parallel(b) or b.is_parallel(c) or a.is_parallel(c):
        return False
    return len({intersect_lines(a, b), intersect_lines(b, c), intersect_lines(a, c)}) == 3


def test_find_triple_when_line_zero_is_in_the_pencil():
    # line 0 and everything else through the origin except one parallel to line 0
    lines = [y_eq(0), y_eq(1), y_eq(-1), y_eq(2), y_eq(0, 5)]
    t = find_triple(lines)
    assert t is not None and _valid_triple(lines, t)


def test_bundles_on_base_examples():
    base = y_eq(0)
    lines = [base, y_eq(1), y_eq(2), x_eq(5)]
    bundles, par = bundles_on_base(lines, 0, AXIS_FRAME)
    assert [b.point for b in bundles] == [Point2(0, 0), Point2(5, 0)]
    assert bundles[0].members == (2, 1)  # y=2x leans further left than y=x
    assert bundles[1].members == (3,)
    assert par == []

    bundles, par = bundles_on_base([base, y_eq(0, 1), y_eq(0, 2)], 0, AXIS_FRAME)
    assert bundles == [] and par == [1, 2]

    bundles, _ = bundles_on_base([base, y_eq(1), y_eq(-1)], 0, AXIS_FRAME)
    assert len(bundles) == 1 and set(bundles[0].members) == {1, 2}


def test_lowest_candidate_examples():
    base = y_eq(0)
    lines = [base, y_eq(1), y_eq(-1, 2)]
    bundles, _ = bundles_on_base(lines, 0, AXIS_FRAME)
    x, pair = lowest_candidate(bundles, lines, AXIS_FRAME)
    assert x == Point2(1, 1) and set(pair) == {1, 2}

    lines = [base, y_eq(1), y_eq(-1, 2), y_eq(3, -12)]
    bundles, _ = bundles_on_base(lines, 0, AXIS_FRAME)
    x, _ = lowest_candidate(bundles, lines, AXIS_FRAME)
    assert x == Point2(1, 1)

    lines = [base, y_eq(1), y_eq(-1)]
    bundles, _ = bundles_on_base(lines, 0, AXIS_FRAME)
    assert lowest_candidate(bundles, lines, AXIS_FRAME) is None


def _check(lines):
    res = find_ordinary_point_2d(lines)
    assert incidences(lines, res.point) == sorted(res.witnesses)
    return res


def test_triangle():
    res = _check([y_eq(0), y_eq(1), y_eq(-1, 2)])
    assert res.point in {Point2(0, 0), Point2(2, 0), Point2(1, 1)}


def test_origin_with_three_lines_is_avoided():
    res = _check([y_eq(1), y_eq(-1), y_eq(0), x_eq(1)])
    assert res.point != Point2(0, 0)
    assert res.point.x == 1


def test_grid_is_trivial():
    res = _check([x_eq(0), x_eq(1), y_eq(0), y_eq(0, 1)])
    assert res.provenance == TRIVIAL_GRID


def test_errors():
    with pytest.raises(AllConcurrent, match="all lines concurrent"):
        find_ordinary_point_2d([y_eq(1), y_eq(2), y_eq(3)])
    with pytest.raises(AllParallel):
        find_ordinary_point_2d([y_eq(1, 0), y_eq(1, 1), y_eq(1, 2)])
    with pytest.raises(NotAnArrangement):
        find_ordinary_point_2d([y_eq(1)])
    with pytest.raises(NotAnArrangement):
        find_ordinary_point_2d([y_eq(1), y_eq(2), y_eq(1)])


def test_lowest_x_and_parallel_y_by_hand():
    # base y=0 with 2-bundles at x=0 and x=2; the consecutive crossing (1, 1)
    # is the lowest one above the base
    lines = numbered([y_eq(0), y_eq(1), y_eq(2), y_eq(-1, 2), y_eq(-2, 4)])
    res = _check(lines)
    assert (res.point, res.provenance) == (Point2(1, 1), LOWEST_X)
    # a horizontal line through (1, 1) moves the answer to where it meets
    # the leftmost line of the leftmost bundle, y=2x
    res = _check(lines + [y_eq(0, 1, id=5)])
    assert (res.point, res.provenance) == (Point2(Fraction(1, 2), 1), PARALLEL_Y)
    assert sorted(res.witnesses) == [2, 5]


@pytest.mark.parametrize("seed", range(30))
def test_lowest_x_is_lowest_crossing_above_base(seed):
    lines = generate(GenSpec("pencil_plus", 10 + seed % 20, seed=seed, max_bundle_size=4))
    res = _check(lines)
    if res.provenance != LOWEST_X:
        return
    i0, i1, i2 = find_triple(lines)
    frame = base_frame(lines[i0], intersect_lines(lines[i1], lines[i2]))
    best = lowest_crossing_above(lines, i0, frame)
    assert frame(res.point).y == best.y


@given(st.integers(3, 60), st.integers(0, 2**32), st.integers(2, 5), st.sampled_from([0, 2, 3]))
@settings(max_examples=60, deadline=None)
def test_random_arrangements(n, seed, bundle, families):
    lines = generate(GenSpec("random", n, seed=seed, max_bundle_size=bundle,
                             parallel_family_count=families))
    res = _check(lines)
    bundles, par = bundles_on_base(lines, 0, base_frame(lines[0], Point2(*_off(lines[0]))))
    assert sum(len(b.members) for b in bundles) + len(par) + 1 == n
    assert find_ordinary_point_2d(list(lines)) == res


def _off(l):
    # some point not on l
    return (Fraction(l.c + 1, l.a), 0) if l.a else (0, Fraction(l.c + 1, l.b))
