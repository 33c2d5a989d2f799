"""Pseudoline arrangements as x-monotone rational polylines, plus the
triangle-shrinking searches for ordinary and monochromatic crossings.

A pseudoline is the graph of a piecewise-linear function: a strictly
increasing run of vertices with an infinite ray at each end.  "Above" a
pseudoline means a larger function value at the same x.  The segment count
is capped (``ORDINARY_SMAX``, default 64) so that the pairwise primitives
cost O(1) in the number of pseudolines.
"""

from __future__ import annotations

import os
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    AllConcurrent,
    InvalidArrangement,
    MultipleCrossings,
    NoCrossing,
    NotAnArrangement,
)
from .geometry import COLORS, Line2, Point2, ScalarLike, check_color, to_scalar

DEFAULT_SMAX = 64


def segment_cap() -> int:
    raw = os.environ.get("ORDINARY_SMAX")
    if raw is None:
        return DEFAULT_SMAX
    cap = int(raw)
    if cap < 2:
        raise ValueError("ORDINARY_SMAX must be at least 2")
    return cap


@dataclass(frozen=True, eq=False)
class Pseudoline:
    vertices: tuple[Point2, ...]
    left_slope: Fraction
    right_slope: Fraction
    color: Optional[str] = None
    id: Optional[int] = None
    max_segments: Optional[int] = field(default=None, repr=False)
    xs: tuple[Fraction, ...] = field(init=False, repr=False)

    def __post_init__(self):
        verts = tuple(Point2(to_scalar(v[0]), to_scalar(v[1])) for v in self.vertices)
        if not verts:
            raise ValueError("a pseudoline needs at least one vertex")
        xs = tuple(v.x for v in verts)
        if any(a >= b for a, b in zip(xs, xs[1:])):
            raise ValueError("vertex x-coordinates must be strictly increasing")
        cap = self.max_segments if self.max_segments is not None else segment_cap()
        if len(verts) + 1 > cap:
            raise ValueError(f"{len(verts) + 1} segments exceed the cap of {cap} (ORDINARY_SMAX raises it)")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "left_slope", to_scalar(self.left_slope))
        object.__setattr__(self, "right_slope", to_scalar(self.right_slope))
        check_color(self.color)

    @classmethod
    def straight(cls, slope: ScalarLike, intercept: ScalarLike, color=None, id=None) -> Pseudoline:
        """The line ``y = slope*x + intercept``."""
        s = to_scalar(slope)
        return cls((Point2(Fraction(0), to_scalar(intercept)),), s, s, color, id)

    @classmethod
    def from_line(cls, line: Line2) -> Pseudoline:
        if line.b == 0:
            raise ValueError(f"vertical line {line} is not x-monotone")
        return cls.straight(Fraction(-line.a, line.b), Fraction(line.c, line.b), line.color, line.id)

    @property
    def segments(self) -> int:
        return len(self.vertices) + 1

    def with_color(self, color: Optional[str]) -> Pseudoline:
        return Pseudoline(self.vertices, self.left_slope, self.right_slope, color, self.id,
                          self.max_segments)

    def __call__(self, x: ScalarLike) -> Fraction:
        return eval_at_x(self, x)


def eval_at_x(p: Pseudoline, x: ScalarLike) -> Fraction:
    xs, vs = p.xs, p.vertices
    if x <= xs[0]:
        return vs[0].y + p.left_slope * (x - xs[0])
    if x >= xs[-1]:
        return vs[-1].y + p.right_slope * (x - xs[-1])
    k = bisect_right(xs, x)
    x0, y0 = vs[k - 1]
    x1, y1 = vs[k]
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0)


def contains(p: Pseudoline, pt: Point2) -> bool:
    return eval_at_x(p, pt.x) == pt.y


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _heights(p: Pseudoline, xs: Sequence[Fraction]) -> list[Fraction]:
    """``eval_at_x(p, x)`` for each of the sorted ``xs``, in one merge pass."""
    out = []
    vs = p.vertices
    k = 0  # index of the first vertex with x > current x
    last = len(vs) - 1
    for x in xs:
        while k <= last and vs[k].x <= x:
            k += 1
        if k > 0 and vs[k - 1].x == x:
            out.append(vs[k - 1].y)
        elif k == 0:
            out.append(vs[0].y + p.left_slope * (x - vs[0].x))
        elif k > last:
            out.append(vs[last].y + p.right_slope * (x - vs[last].x))
        else:
            x0, y0 = vs[k - 1]
            x1, y1 = vs[k]
            out.append(y0 + (y1 - y0) * (x - x0) / (x1 - x0))
    return out


def crossings(p: Pseudoline, q: Pseudoline) -> tuple[list[Point2], list[str]]:
    """All transversal crossings of ``p`` and ``q`` plus any contact problems
    (``"touch"`` or ``"overlap"``), from the sign pattern of ``p - q`` at
    the merged breakpoints and on the two end rays."""
    xs = sorted(set(p.xs) | set(q.xs))
    vals = [a - b for a, b in zip(_heights(p, xs), _heights(q, xs))]
    dl = p.left_slope - q.left_slope
    dr = p.right_slope - q.right_slope
    found: list[Point2] = []
    problems: list[str] = []

    def at(x):
        return Point2(x, eval_at_x(p, x))

    last = len(xs) - 1
    if vals[0] != 0 and dl != 0 and _sign(vals[0]) == _sign(dl):
        found.append(at(xs[0] - vals[0] / dl))
    if (dl == 0 and vals[0] == 0) or (dr == 0 and vals[last] == 0):
        problems.append("overlap")
    for i, v in enumerate(vals):
        if v == 0:
            before = -_sign(dl) if i == 0 else _sign(vals[i - 1])
            after = _sign(dr) if i == last else _sign(vals[i + 1])
            if before == 0 or after == 0:
                if "overlap" not in problems:
                    problems.append("overlap")
            elif before != after:
                found.append(at(xs[i]))
            else:
                problems.append("touch")
        elif i < last and vals[i + 1] != 0 and _sign(vals[i + 1]) != _sign(v):
            x0, x1 = xs[i], xs[i + 1]
            found.append(at(x0 + v * (x1 - x0) / (v - vals[i + 1])))
    if vals[last] != 0 and dr != 0 and _sign(vals[last]) != _sign(dr):
        found.append(at(xs[last] - vals[last] / dr))
    return found, problems


def intersect_pseudolines(p: Pseudoline, q: Pseudoline) -> Point2:
    found, problems = crossings(p, q)
    if len(found) == 1 and not problems:
        return found[0]
    if not found and not problems:
        raise NoCrossing(f"pseudolines {p.id} and {q.id} never cross")
    if not found:
        raise NoCrossing(f"pseudolines {p.id} and {q.id} meet without crossing ({', '.join(problems)})")
    raise MultipleCrossings(
        f"pseudolines {p.id} and {q.id} meet more than once "
        f"({len(found)} crossings, {len(problems)} other contacts)"
    )


@dataclass
class ValidationReport:
    n: int
    violations: list[tuple[int, int, str]] = field(default_factory=list)
    all_concurrent: bool = False
    crossing_points: dict[tuple[int, int], Point2] = field(default_factory=dict, repr=False)

    @property
    def valid(self) -> bool:
        return not self.violations and not self.all_concurrent and self.n >= 3

    def raise_if_invalid(self) -> None:
        if self.n < 3:
            raise NotAnArrangement("at least three pseudolines are required")
        if self.violations:
            i, j, kind = self.violations[0]
            raise InvalidArrangement(
                f"{len(self.violations)} bad pair(s); first: {i}, {j} ({kind})"
            )
        if self.all_concurrent:
            raise AllConcurrent("all pseudolines cross at one point")


def validate_arrangement(ps: Sequence[Pseudoline]) -> ValidationReport:
    report = ValidationReport(len(ps))
    points = set()
    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            found, problems = crossings(ps[i], ps[j])
            if len(found) == 1 and not problems:
                report.crossing_points[(i, j)] = found[0]
                points.add(found[0])
            elif not found and not problems:
                report.violations.append((i, j, "no crossing"))
            elif not found:
                report.violations.append((i, j, "no transversal crossing: " + ", ".join(problems)))
            else:
                report.violations.append((i, j, "multiple contacts"))
    report.all_concurrent = len(points) <= 1
    return report


def pseudolines_through(ps: Sequence[Pseudoline], pt: Point2) -> list[int]:
    return [i for i, p in enumerate(ps) if eval_at_x(p, pt.x) == pt.y]


@dataclass(frozen=True)
class TriangleState:
    """One step of the triangle search.

    The triangle has ``apex`` and base corners ``left_pt``/``right_pt`` on
    pseudoline ``base``; ``left_side`` and ``right_side`` join the apex to
    those corners.  ``middle`` runs from the apex to ``middle_pt`` on the base,
    the point tested at this step.  ``divider`` is the pseudoline chosen
    through ``middle_pt`` when the test fails.
    """

    step: int
    apex: Point2
    base: int
    left_pt: Point2
    right_pt: Point2
    left_side: int
    right_side: int
    middle_pt: Point2
    middle: int
    expected_color: Optional[str]
    used_dividers: frozenset
    divider: Optional[int] = None

    def to_json(self) -> dict:
        def pt(p):
            return [str(p.x), str(p.y)]

        return {
            "step": self.step,
            "apex": pt(self.apex),
            "base": self.base,
            "left_pt": pt(self.left_pt),
            "right_pt": pt(self.right_pt),
            "left_side": self.left_side,
            "right_side": self.right_side,
            "middle_pt": pt(self.middle_pt),
            "middle": self.middle,
            "divider": self.divider,
            "expected_color": self.expected_color,
        }


@dataclass(frozen=True)
class MonoResult:
    point: Point2
    color: str
    witnesses: tuple[int, ...]
    trace: tuple[TriangleState, ...] = ()


def _strictly_between(x, a, b) -> bool:
    return a < x < b or b < x < a


def _shrink(ps, apex, base, q, s, side_q, side_s, r, mid, accept, pick_divider, expected, flip):
    """Run the triangle recursion until ``accept`` holds at the tested point.

    ``accept(through)`` decides the tested point; ``pick_divider(through,
    base, mid, expected)`` chooses the next dividing pseudoline.  ``flip``
    maps the expected color to the next step's.  Returns ``(point, through,
    trace)``.
    """
    n = len(ps)
    used: set[int] = set()
    trace: list[TriangleState] = []
    step = 0
    while True:
        through = pseudolines_through(ps, r)
        if base not in through or mid not in through:
            raise AssertionError("tested point is not on its base and middle pseudolines")
        if accept(through, expected):
            trace.append(TriangleState(step, apex, base, q, s, side_q, side_s, r, mid,
                                       expected, frozenset(used)))
            return r, through, trace
        div = pick_divider(through, base, mid, expected)
        if div in used:
            raise AssertionError(f"pseudoline {div} used twice as a dividing line")
        trace.append(TriangleState(step, apex, base, q, s, side_q, side_s, r, mid,
                                   expected, frozenset(used), div))
        used.add(div)
        if len(trace) > n:
            raise AssertionError("triangle search exceeded n steps")
        hit_q = intersect_pseudolines(ps[div], ps[side_q])
        hit_s = intersect_pseudolines(ps[div], ps[side_s])
        on_q = _strictly_between(hit_q.x, q.x, apex.x)
        on_s = _strictly_between(hit_s.x, s.x, apex.x)
        if on_q == on_s:
            raise AssertionError(
                f"dividing pseudoline {div} crosses {'both' if on_q else 'neither'} open side(s)"
            )
        # The tested point becomes the apex; the crossed side becomes the base.
        if on_q:
            apex, base, q, s, side_q, side_s, r = r, side_q, apex, q, mid, base, hit_q
        else:
            apex, base, q, s, side_q, side_s, r = r, side_s, apex, s, mid, base, hit_s
        mid = div
        expected = flip(expected)
        step += 1


def _triple(ps):
    p = intersect_pseudolines(ps[0], ps[1])
    k = next((k for k in range(2, len(ps)) if not contains(ps[k], p)), None)
    if k is None:
        raise AllConcurrent("all pseudolines cross at one point")
    return 0, 1, k


def find_ordinary_pseudoline(ps: Sequence[Pseudoline], validate: bool = True):
    """Return ``(point, (i, j), trace)`` with exactly pseudolines ``i`` and
    ``j`` through ``point``.

    Each step costs O(n) incidence tests and a pseudoline never divides twice,
    so the whole search is O(n^2).
    """
    if len(ps) < 3:
        raise NotAnArrangement("at least three pseudolines are required")
    if validate:
        validate_arrangement(ps).raise_if_invalid()
    i0, i1, i2 = _triple(ps)
    p = intersect_pseudolines(ps[i1], ps[i2])
    through = pseudolines_through(ps, p)
    if len(through) == 2:
        return p, (through[0], through[1]), []

    feet = sorted((intersect_pseudolines(ps[k], ps[i0]).x, k) for k in through)
    if any(a[0] == b[0] for a, b in zip(feet, feet[1:])):
        raise AssertionError("two pseudolines through the apex meet the base at one point")
    side_q, mid, side_s = feet[0][1], feet[1][1], feet[-1][1]
    q = intersect_pseudolines(ps[side_q], ps[i0])
    s = intersect_pseudolines(ps[side_s], ps[i0])
    r = intersect_pseudolines(ps[mid], ps[i0])

    def accept(through, _):
        return len(through) == 2

    def pick(through, base, mid, _):
        return min(k for k in through if k != base and k != mid)

    point, through, trace = _shrink(ps, p, i0, q, s, side_q, side_s, r, mid,
                                    accept, pick, None, lambda c: c)
    last = trace[-1]
    return point, (min(last.base, last.middle), max(last.base, last.middle)), trace


def _other(color: str) -> str:
    return COLORS[1] if color == COLORS[0] else COLORS[0]


def find_monochromatic(ps: Sequence[Pseudoline], validate: bool = True) -> MonoResult:
    """Find a crossing whose pseudolines all share one color."""
    if len(ps) < 3:
        raise NotAnArrangement("at least three pseudolines are required")
    if any(p.color is None for p in ps):
        raise ValueError("every pseudoline needs a color")
    if validate:
        validate_arrangement(ps).raise_if_invalid()
    colors = [p.color for p in ps]
    if len(set(colors)) == 1:
        pt = intersect_pseudolines(ps[0], ps[1])
        return MonoResult(pt, colors[0], tuple(pseudolines_through(ps, pt)))

    # roles are positional: "first" is the base's color
    first = colors[0]
    second = _other(first)
    feet = [intersect_pseudolines(ps[0], ps[k]) for k in range(1, len(ps))]
    q = min(feet, key=lambda pt: pt.x)
    s = max(feet, key=lambda pt: pt.x)
    if q == s:
        raise AllConcurrent("all pseudolines cross the base at one point")

    def mono(through, color):
        return all(colors[k] == color for k in through)

    thr_q = pseudolines_through(ps, q)
    if mono(thr_q, first):
        return MonoResult(q, first, tuple(thr_q))
    thr_s = pseudolines_through(ps, s)
    if mono(thr_s, first):
        return MonoResult(s, first, tuple(thr_s))
    side_q = min(k for k in thr_q if colors[k] == second)
    side_s = min(k for k in thr_s if colors[k] == second)
    apex = intersect_pseudolines(ps[side_q], ps[side_s])
    thr_p = pseudolines_through(ps, apex)
    if mono(thr_p, second):
        return MonoResult(apex, second, tuple(thr_p))
    mid = min(k for k in thr_p if colors[k] == first)
    r = intersect_pseudolines(ps[mid], ps[0])
    if not q.x < r.x < s.x:
        raise AssertionError("middle foot is not strictly between the extreme feet")

    def pick(through, base, mid, expected):
        return min(k for k in through if colors[k] != expected)

    point, through, trace = _shrink(ps, apex, 0, q, s, side_q, side_s, r, mid,
                                    mono, pick, first, _other)
    return MonoResult(point, trace[-1].expected_color, tuple(through), tuple(trace))


def embed_lines(lines: Sequence[Line2]) -> tuple[list[Pseudoline], Fraction]:
    """Straight pseudolines for ``lines`` after the shear ``x -> x + t*y``.

    ``t`` is 0 unless some line is vertical; it is the smallest positive
    integer that keeps every sheared line non-vertical.  Map points back with
    :func:`unshear`.
    """
    bad = {Fraction(l.b, l.a) for l in lines if l.a != 0}
    t = 0
    if any(l.b == 0 for l in lines):
        t = 1
        while t in bad:
            t += 1
    out = []
    for l in lines:
        b = l.b - l.a * t
        out.append(Pseudoline.straight(Fraction(-l.a, b), Fraction(l.c, b), l.color, l.id))
    return out, Fraction(t)


def unshear(pt: Point2, t: ScalarLike) -> Point2:
    return Point2(pt.x - t * pt.y, pt.y)
