from fractions import Fraction
from math import ceil

import pytest

from ordinary import canonical_hyperplane
from ordinary.errors import OracleTooLarge
from ordinary.generators import GenSpec, generate
from ordinary.oracle import (
    check_hypotheses_nd,
    classify,
    enumerate_2d,
    enumerate_nd,
    incidences,
    lenchner_bound,
    rank,
)
from ordinary.pseudolines import embed_lines, unshear

from util import x_eq, y_eq


def H(*coeffs):
    return canonical_hyperplane(coeffs[:-1], coeffs[-1])


def test_enumerate_2d_examples():
    tri = enumerate_2d([y_eq(0), y_eq(1), y_eq(-1, 2)])
    assert len(tri) == 3 and all(len(inc) == 2 for _, inc in tri.entries)

    m = enumerate_2d([y_eq(1), y_eq(-1), y_eq(2), y_eq(0, 1)])
    assert m.as_dict()[(0, 0)] == (0, 1, 2)
    assert sorted(len(inc) for _, inc in m.entries) == [2, 2, 2, 3]

    grid = enumerate_2d([x_eq(0), x_eq(1), y_eq(0), y_eq(0, 1)])
    assert len(grid) == 4 and all(len(inc) == 2 for _, inc in grid.entries)


def test_enumerate_nd_examples():
    m = enumerate_nd([H(1, 0, 0, 0), H(0, 1, 0, 0), H(0, 0, 1, 0), H(1, 1, 1, 1)])
    assert len(m) == 4 and all(len(inc) == 3 for _, inc in m.entries)
    assert len(enumerate_nd([H(1, 0, 0, 0), H(1, 0, 0, 1), H(0, 1, 0, 0), H(0, 1, 0, 1)])) == 0
    m = enumerate_nd([H(1, 0, 0, 0), H(0, 1, 0, 0), H(0, 0, 1, 0), H(1, 1, 1, 0)])
    assert m.entries == [((0, 0, 0), (0, 1, 2, 3))]


def test_enumerate_nd_cap():
    hs = generate(GenSpec("random", 400, d=4, seed=1))
    with pytest.raises(OracleTooLarge):
        enumerate_nd(hs)


def test_classify_examples():
    tri = enumerate_2d([y_eq(0), y_eq(1), y_eq(-1, 2)])
    assert classify(tri).ordinary_count == 3

    lines = [y_eq(1, color="red"), y_eq(-1, color="red"), y_eq(0, color="blue"), x_eq(2, color="blue")]
    cls = classify(enumerate_2d(lines), [l.color for l in lines])
    assert cls.monochromatic == {"blue": [(2, 0)], "red": []}
    assert cls.biased


@pytest.mark.parametrize("seed", range(5))
def test_lines_and_embedded_pseudolines_agree(seed):
    lines = []
    for l in generate(GenSpec("random", 14, seed=seed, max_bundle_size=4)):
        if not any(l.is_parallel(m) for m in lines):
            lines.append(l)
    if all(l.b != 0 for l in lines):
        lines.append(x_eq(1))  # a vertical line forces a shear
    ps, t = embed_lines(lines)
    assert t != 0
    got = sorted((unshear(p, t), inc) for p, inc in enumerate_2d(ps).entries)
    assert got == enumerate_2d(lines).entries


@pytest.mark.parametrize("seed", range(10))
def test_lenchner_bound_on_random_lines(seed):
    lines = generate(GenSpec("random", 7 + 3 * seed, seed=seed, max_bundle_size=4))
    cls = classify(enumerate_2d(lines))
    assert cls.ordinary_count >= ceil(lenchner_bound(len(lines)))


def test_pseudoline_arrangements_have_an_ordinary_point():
    for seed in range(5):
        ps = generate(GenSpec("wiring_diagram", 12, seed=seed, max_bundle_size=5))
        assert classify(enumerate_2d(ps)).ordinary_count >= 1


def test_hypothesis_checker_examples():
    ok = check_hypotheses_nd([H(1, 0, 0, 0), H(0, 1, 0, 0), H(0, 0, 1, 0), H(1, 1, 1, 1)])
    assert ok.ok and ok.normal_rank == 3

    flat = check_hypotheses_nd([H(1, 0, 0, 0), H(0, 1, 0, 0), H(1, 1, 0, 1)])
    assert not flat.lines_shared and flat.normal_rank == 2
    assert not flat.common_point_exists
    assert any("no intersection point" in note for note in flat.notes())

    axis = check_hypotheses_nd([H(1, 0, 0, 0), H(0, 1, 0, 0), H(1, -1, 0, 0)])
    assert axis.lines_shared == [(0, 1, 2)]
    assert not axis.ok


def test_all_parallel_uses_reduced_normals():
    assert check_hypotheses_nd([H(2, 4, 0, 5), H(1, 2, 0, 3), H(1, 2, 0, 7)]).all_parallel


def test_rank_and_incidences():
    assert rank([(1, 2), (2, 4)]) == 1
    assert rank([(0, 0, 0)]) == 0
    assert rank([(Fraction(1, 2), 1), (1, Fraction(1, 3))]) == 2
    assert incidences([y_eq(0), y_eq(1), x_eq(3)], (0, 0)) == [0, 1]
