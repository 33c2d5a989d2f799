"""Ordinary intersection points of planar line arrangements in O(n log n).

The search fixes a base line ``L0`` taken from a triangle of the
arrangement, groups the other lines into bundles by where they cross
``L0``, and then looks only at the crossings of *consecutive* lines: the
rightmost line through one bundle against the leftmost line through the
next.  The lowest such crossing above ``L0`` is ordinary unless a line
parallel to ``L0`` runs through it, and in that case the parallel line meets
the leftmost line of the leftmost bundle in an ordinary point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import inf
from typing import Optional, Sequence

from .errors import AllConcurrent, AllParallel, NotAnArrangement
from .geometry import AffineMap2, Line2, Point2, base_frame, intersect_lines

TRIVIAL_GRID = "trivial_grid"
ORDINARY_BUNDLE = "ordinary_bundle"
LOWEST_X = "lowest_X"
PARALLEL_Y = "parallel_Y"
PROVENANCES = (TRIVIAL_GRID, ORDINARY_BUNDLE, LOWEST_X, PARALLEL_Y)


@dataclass(frozen=True)
class Bundle:
    """Lines crossing the base at ``point`` (frame coordinates).

    ``members`` runs from the leftmost line (steepest lean to the left when
    walking upward) to the rightmost.
    """

    point: Point2
    members: tuple[int, ...]

    @property
    def leftmost(self) -> int:
        return self.members[0]

    @property
    def rightmost(self) -> int:
        return self.members[-1]


@dataclass(frozen=True)
class OrdinaryResult2D:
    point: Point2
    witnesses: tuple[int, int]
    provenance: str


def _check_lines(lines: Sequence[Line2]) -> None:
    if len(lines) < 2:
        raise NotAnArrangement("at least two lines are required")
    seen: dict[tuple[int, int, int], int] = {}
    for i, l in enumerate(lines):
        j = seen.setdefault(l.key, i)
        if j != i:
            raise NotAnArrangement(f"lines {j} and {i} coincide ({l})")


def find_triple(lines: Sequence[Line2]) -> Optional[tuple[int, int, int]]:
    """Three lines meeting pairwise in three distinct points, in O(n).

    Line 0 is paired with the first line not parallel to it; a single scan
    then looks for a line avoiding both directions and their crossing.  If
    the scan fails every line is parallel to one of the pair or passes
    through the crossing, and one more scan settles the remaining cases.
    """
    n = len(lines)
    if n < 3:
        return None
    l0 = lines[0]
    j = next((k for k in range(1, n) if not l0.is_parallel(lines[k])), None)
    if j is None:
        return None
    lj = lines[j]
    p = intersect_lines(l0, lj)
    for k in range(1, n):
        lk = lines[k]
        if k != j and not lk.is_parallel(l0) and not lk.is_parallel(lj) and not lk.contains(p):
            return (0, j, k)
    # Everything is in the pencil through p or parallel to l0 or lj.
    third = next(
        (k for k in range(1, n)
         if k != j and not lines[k].is_parallel(l0) and not lines[k].is_parallel(lj)),
        None,
    )
    if third is None:
        return None  # at most two directions
    stray = next((k for k in range(1, n) if not lines[k].contains(p)), None)
    if stray is None:
        return None  # a full pencil
    if lines[stray].is_parallel(l0):
        return (stray, j, third)
    return (0, stray, third)


def _approx(p: int, q: int) -> float:
    # Correctly rounded, hence monotone: a float key never contradicts the
    # exact order, and equal floats fall through to the Fraction behind it.
    try:
        return p / q
    except OverflowError:
        return inf if (p > 0) == (q > 0) else -inf


def bundles_on_base(
    lines: Sequence[Line2], base_index: int, frame: AffineMap2
) -> tuple[list[Bundle], list[int]]:
    """Group lines by their crossing with the base line.

    ``frame`` must map the base onto the x-axis.  Returns the bundles sorted
    left to right and the indices of the lines parallel to the base.  Sorting
    dominates at O(n log n).
    """
    keyed = []
    parallels = []
    for i, l in enumerate(lines):
        if i == base_index:
            continue
        fl = frame.apply_line(l)
        if fl.a == 0:
            parallels.append(i)
            continue
        # canonical form has a > 0; the direction pointing up is (-b, a), so
        # -b/a is the cotangent of the slope angle: smaller means further left
        keyed.append((
            _approx(fl.c, fl.a), Fraction(fl.c, fl.a),
            _approx(-fl.b, fl.a), Fraction(-fl.b, fl.a), i,
        ))
    keyed.sort()
    bundles: list[Bundle] = []
    start = 0
    for k in range(1, len(keyed) + 1):
        if k == len(keyed) or keyed[k][1] != keyed[start][1]:
            bundles.append(Bundle(
                Point2(keyed[start][1], Fraction(0)),
                tuple(e[4] for e in keyed[start:k]),
            ))
            start = k
    return bundles, parallels


def lowest_candidate(
    bundles: Sequence[Bundle], lines: Sequence[Line2], frame: Optional[AffineMap2] = None
) -> Optional[tuple[Point2, tuple[int, int]]]:
    """Lowest crossing strictly above the base among consecutive lines.

    Candidates are ``rightmost(P_k) ∩ leftmost(P_k+1)``.  Points are in frame
    coordinates; when ``frame`` is omitted ``lines`` are taken to be in frame
    coordinates already.  Ties go to the smaller x.
    """
    best: Optional[tuple[Fraction, Fraction, int, int]] = None
    image = {}

    def framed(i: int) -> Line2:
        if frame is None:
            return lines[i]
        if i not in image:
            image[i] = frame.apply_line(lines[i])
        return image[i]

    for left, right in zip(bundles, bundles[1:]):
        i, j = left.rightmost, right.leftmost
        x = intersect_lines(framed(i), framed(j))
        if x is None or x.y <= 0:
            continue
        if best is None or (x.y, x.x) < (best[0], best[1]):
            best = (x.y, x.x, i, j)
    if best is None:
        return None
    return Point2(best[1], best[0]), (best[2], best[3])


def _two_directions(lines: Sequence[Line2]) -> bool:
    dirs = {l.direction_key for l in lines}
    return len(dirs) == 2


def find_ordinary_point_2d(lines: Sequence[Line2]) -> OrdinaryResult2D:
    """Return a point lying on exactly two of ``lines``.

    Raises :class:`AllParallel` or :class:`AllConcurrent` when the
    arrangement has no ordinary point to find.
    """
    _check_lines(lines)
    triple = find_triple(lines)
    if triple is None:
        j = next((k for k in range(1, len(lines)) if not lines[0].is_parallel(lines[k])), None)
        if j is None:
            raise AllParallel("all lines are parallel")
        if _two_directions(lines):
            p = intersect_lines(lines[0], lines[j])
            return OrdinaryResult2D(p, (0, j), TRIVIAL_GRID)
        raise AllConcurrent("all lines concurrent")

    i0, i1, i2 = triple
    witness = intersect_lines(lines[i1], lines[i2])
    frame = base_frame(lines[i0], witness)
    back = frame.inverse()
    bundles, parallels = bundles_on_base(lines, i0, frame)

    for b in bundles:
        if len(b.members) == 1:
            return OrdinaryResult2D(back(b.point), (i0, b.members[0]), ORDINARY_BUNDLE)

    found = lowest_candidate(bundles, lines, frame)
    if found is None:
        raise AssertionError("no crossing above the base although the triple guarantees one")
    x, pair = found
    m = None
    for k in parallels:
        fl = frame.apply_line(lines[k])
        # horizontal in the frame: b*y = c
        if fl.c == fl.b * x.y:
            m = k
            break
    if m is None:
        return OrdinaryResult2D(back(x), pair, LOWEST_X)

    first = bundles[0].leftmost
    y = intersect_lines(lines[m], lines[first])
    return OrdinaryResult2D(y, (m, first), PARALLEL_Y)
