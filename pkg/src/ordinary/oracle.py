"""Brute-force ground truth for every search in the package.

Nothing here calls the search code it is meant to check: crossings are
recomputed pair by pair, subsets of hyperplanes are solved with fraction-free
integer elimination, and ranks come from plain full Gaussian elimination.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from .errors import InvalidArrangement, OracleTooLarge
from .flats import HyperplaneD
from .geometry import Line2, Point2
from .pseudolines import Pseudoline, crossings, eval_at_x

ENUMERATION_CAP = 10**7


@dataclass
class IncidenceMap:
    """Every intersection point with the sorted indices of the elements on it."""

    entries: list[tuple[tuple, tuple[int, ...]]]

    def __len__(self) -> int:
        return len(self.entries)

    def as_dict(self) -> dict:
        return {tuple(p): inc for p, inc in self.entries}

    def degree(self, point) -> int:
        return len(self.as_dict().get(tuple(point), ()))


def rank(vectors: Sequence[Sequence]) -> int:
    """Rank by full Gaussian elimination over the rationals."""
    m = [[Fraction(x) for x in v] for v in vectors]
    if not m:
        return 0
    r = 0
    for col in range(len(m[0])):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if m[i][col] != 0:
                f = m[i][col] / m[r][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def _bareiss_rank(rows: list[list[int]], ncols: int) -> int:
    """Rank of the leading ``ncols`` columns of an integer matrix, fraction free."""
    m = [list(r) for r in rows]
    n = len(m)
    r = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(r, n) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, n):
            for j in range(col + 1, len(m[i])):
                m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) // prev
            m[i][col] = 0
        prev = m[r][col]
        r += 1
    return r


def _cramer(hs: Sequence[HyperplaneD]) -> Optional[tuple[Fraction, ...]]:
    """Unique common point of ``d`` hyperplanes via fraction-free elimination
    and back substitution; ``None`` when the normals are dependent."""
    d = len(hs)
    m = [list(h.normal) + [h.offset] for h in hs]
    prev = 1
    for col in range(d):
        piv = next((i for i in range(col, d) if m[i][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        for i in range(col + 1, d):
            for j in range(col + 1, d + 1):
                m[i][j] = (m[col][col] * m[i][j] - m[i][col] * m[col][j]) // prev
            m[i][col] = 0
        prev = m[col][col]
    x = [Fraction(0)] * d
    for i in range(d - 1, -1, -1):
        acc = Fraction(m[i][d]) - sum(m[i][j] * x[j] for j in range(i + 1, d))
        x[i] = acc / m[i][i]
    return tuple(x)


def _line_cross(l1: Line2, l2: Line2) -> Optional[Point2]:
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return None
    return Point2(Fraction(l1.c * l2.b - l2.c * l1.b, det), Fraction(l1.a * l2.c - l2.a * l1.c, det))


def enumerate_2d(elements: Sequence) -> IncidenceMap:
    """All crossings of a list of lines or of pseudolines, grouped exactly."""
    groups: dict[Point2, set[int]] = defaultdict(set)
    pseudo = bool(elements) and isinstance(elements[0], Pseudoline)
    for i, j in combinations(range(len(elements)), 2):
        if pseudo:
            found, problems = crossings(elements[i], elements[j])
            if len(found) != 1 or problems:
                raise InvalidArrangement(f"pseudolines {i} and {j} do not cross exactly once")
            p = found[0]
        else:
            if elements[i].key == elements[j].key:
                raise InvalidArrangement(f"lines {i} and {j} coincide")
            p = _line_cross(elements[i], elements[j])
            if p is None:
                continue
        groups[p].update((i, j))
    return IncidenceMap(sorted((p, tuple(sorted(s))) for p, s in groups.items()))


def enumerate_nd(hs: Sequence[HyperplaneD]) -> IncidenceMap:
    """Every point cut out by ``d`` hyperplanes with independent normals,
    listed once with all hyperplanes through it.  Cost O(C(n, d) * d^3)."""
    if not hs:
        return IncidenceMap([])
    d = hs[0].dim
    total = comb(len(hs), d)
    if total > ENUMERATION_CAP:
        raise OracleTooLarge(f"C({len(hs)}, {d}) = {total} subsets exceeds {ENUMERATION_CAP}")
    points = set()
    for subset in combinations(hs, d):
        p = _cramer(subset)
        if p is not None:
            points.add(p)
    entries = []
    for p in sorted(points):
        inc = tuple(i for i, h in enumerate(hs) if h.evaluate(p) == 0)
        entries.append((p, inc))
    return IncidenceMap(entries)


def incidences(elements: Sequence, point) -> list[int]:
    """Indices of the lines, pseudolines or hyperplanes through ``point``."""
    out = []
    for i, e in enumerate(elements):
        if isinstance(e, Pseudoline):
            on = eval_at_x(e, point[0]) == point[1]
        elif isinstance(e, HyperplaneD):
            on = e.evaluate(point) == 0
        else:
            on = e.a * point[0] + e.b * point[1] == e.c
        if on:
            out.append(i)
    return out


@dataclass
class Classification:
    ordinary_count: int
    degrees: list[int]
    ordinary_points: list[tuple]
    monochromatic: dict[str, list[tuple]] = field(default_factory=dict)

    @property
    def biased(self) -> bool:
        return sum(1 for pts in self.monochromatic.values() if pts) == 1


def classify(imap: IncidenceMap, colors: Optional[Sequence[Optional[str]]] = None, d: int = 2) -> Classification:
    """Count ordinary points (exactly ``d`` incidences) and, given colors,
    list the monochromatic points of each color."""
    degrees = [len(inc) for _, inc in imap.entries]
    ordinary = [p for p, inc in imap.entries if len(inc) == d]
    mono: dict[str, list[tuple]] = {}
    if colors is not None:
        for c in sorted({c for c in colors if c is not None}):
            mono[c] = []
        for p, inc in imap.entries:
            cs = {colors[i] for i in inc}
            if len(cs) == 1:
                (c,) = cs
                if c is not None:
                    mono[c].append(p)
    return Classification(len(ordinary), degrees, ordinary, mono)


def lenchner_bound(n: int) -> Fraction:
    """Lower bound (2n - 3)/7 on the number of ordinary points among
    n >= 7 lines, not all parallel and not all concurrent."""
    return Fraction(2 * n - 3, 7)


@dataclass
class HypothesisReport:
    n: int
    d: int
    normal_rank: int
    all_parallel: bool
    common_point_exists: bool
    all_concurrent: bool
    lines_shared: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.all_parallel and not self.all_concurrent and not self.lines_shared

    def notes(self) -> list[str]:
        out = []
        if self.all_parallel:
            out.append("all hyperplanes are parallel")
        if self.all_concurrent:
            out.append("all hyperplanes share a common point")
        if self.normal_rank < self.d:
            out.append(f"normals span only {self.normal_rank} dimensions: no intersection point exists")
        for s in self.lines_shared[:5]:
            out.append(f"hyperplanes {s} share a line")
        return out


def check_hypotheses_nd(hs: Sequence[HyperplaneD], cap: int = ENUMERATION_CAP) -> HypothesisReport:
    """Exhaustively check: not all parallel, no common point of all, and no
    ``d`` of them through a common line."""
    d = hs[0].dim
    n = len(hs)
    nr = rank([h.normal for h in hs])
    aug = [list(h.normal) + [h.offset] for h in hs]
    consistent = _bareiss_rank(aug, d + 1) == _bareiss_rank(aug, d)
    report = HypothesisReport(
        n, d, nr,
        all_parallel=nr == 1,
        common_point_exists=consistent and nr == d,
        all_concurrent=consistent,
    )
    if comb(n, d) > cap:
        raise OracleTooLarge(f"C({n}, {d}) subsets exceeds {cap}")
    for subset in combinations(range(n), d):
        rows = [aug[i] for i in subset]
        r = _bareiss_rank(rows, d)
        if r < d and _bareiss_rank(rows, d + 1) == r:
            report.lines_shared.append(subset)
    return report


def lowest_crossing_above(lines: Sequence[Line2], base: int, frame) -> Optional[Point2]:
    """Lowest crossing strictly above the base (frame coordinates) among
    lines not parallel to the base, by checking every pair."""
    framed = [frame.apply_line(l) for l in lines]
    best = None
    idx = [i for i in range(len(lines)) if i != base and framed[i].a != 0]
    for i, j in combinations(idx, 2):
        p = _line_cross(framed[i], framed[j])
        if p is not None and p.y > 0 and (best is None or p.y < best.y):
            best = p
    return best
