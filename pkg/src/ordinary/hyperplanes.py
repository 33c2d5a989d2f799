"""Ordinary intersection points of hyperplane arrangements in R^d.

The arrangement is cut down to a 2-flat ``M`` built from one member of each
of ``d - 2`` independent parallel families.  The remaining hyperplanes trace
lines on ``M`` and the planar algorithm finishes the job.  If those traces
form a single pencil, ``M`` is swapped for a parallel translate built with a
different member of one constituent family.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

from .arrangement2d import find_ordinary_point_2d
from .errors import (
    AllConcurrent,
    DimensionMismatch,
    DuplicateHyperplane,
    HypothesisViolated,
    NotAnArrangement,
)
from .flats import Flat, HyperplaneD, PointD, flat_from_hyperplanes, maximal_independent_subset
from .geometry import Line2, canonical_line, intersect_lines

CASE3_ON_M = "case3_on_M"
CASE2_THEN_M_PRIME = "case2_then_M'"


@dataclass(frozen=True)
class FamilyPartition:
    families: list[list[int]]
    family_normals: list[tuple[int, ...]]


@dataclass(frozen=True)
class OrdinaryResultND:
    point: PointD
    witnesses: tuple[int, ...]
    provenance: str
    # diagnostics: how many remaining-family hyperplanes missed the 2-flat
    skipped_traces: int = 0
    constituents: tuple[int, ...] = field(default=())


@dataclass(frozen=True)
class NoIntersectionPoint:
    """Verdict: the normals span fewer than ``d`` dimensions, so no ``d``
    hyperplanes meet in a single point."""

    rank: int
    dim: int


def partition_families(hs: Sequence[HyperplaneD]) -> FamilyPartition:
    """Split into parallel classes by sorting on reduced normals."""
    dirs = [h.direction for h in hs]
    order = sorted(range(len(hs)), key=lambda i: (dirs[i], hs[i].normal, hs[i].offset))
    families: list[list[int]] = []
    normals: list[tuple[int, ...]] = []
    prev = None
    for i in order:
        h = hs[i]
        if prev is not None and hs[prev] == h:
            raise DuplicateHyperplane(f"hyperplanes {prev} and {i} coincide ({h})")
        if normals and normals[-1] == dirs[i]:
            families[-1].append(i)
        else:
            families.append([i])
            normals.append(dirs[i])
        prev = i
    for fam in families:
        fam.sort()
    return FamilyPartition(families, normals)


def _trace(hs, members, m: Flat):
    """Lines cut on ``m`` by ``members``; returns (lines, skipped count).

    Each line's ``id`` is the source hyperplane index.
    """
    lines: list[Line2] = []
    seen: dict[tuple[int, int, int], int] = {}
    skipped = 0
    # scale by the base point's common denominator so every trace is integral
    den = lcm(*(Fraction(x).denominator for x in m.base_point))
    base = [int(x * den) for x in m.base_point]
    u, v = m.directions
    for i in members:
        h = hs[i]
        a = sum(n * x for n, x in zip(h.normal, u)) * den
        b = sum(n * x for n, x in zip(h.normal, v)) * den
        c = h.offset * den - sum(n * x for n, x in zip(h.normal, base))
        if a == 0 and b == 0:
            if c == 0:
                raise HypothesisViolated(
                    f"hyperplane {i} contains the 2-flat cut by d-2 others"
                )
            skipped += 1
            continue
        line = canonical_line(a, b, c, id=i)
        other = seen.setdefault(line.key, i)
        if other != i:
            raise HypothesisViolated(
                f"hyperplanes {other} and {i} trace the same line on the 2-flat"
            )
        lines.append(line)
    return lines, skipped


def _pencil_point(lines: Sequence[Line2]):
    """Common point of all ``lines`` if there are at least three of them and
    they are concurrent, else ``None``."""
    if len(lines) < 3:
        return None
    first = lines[0]
    other = next((l for l in lines[1:] if not l.is_parallel(first)), None)
    if other is None:
        return None
    p = intersect_lines(first, other)
    if all(l.contains(p) for l in lines):
        return p
    return None


def find_ordinary_point_nd(hs: Sequence[HyperplaneD]):
    """Return an :class:`OrdinaryResultND` (a point on exactly ``d`` of
    ``hs``) or a :class:`NoIntersectionPoint` verdict.

    Only hypothesis violations met along the way are detected: a pencil of
    traces on both ``M`` and ``M'``, hyperplanes tracing the same line, or a
    hyperplane containing ``M``.
    """
    if not hs:
        raise NotAnArrangement("empty arrangement")
    d = hs[0].dim
    if any(h.dim != d for h in hs):
        raise DimensionMismatch("hyperplanes of different dimensions")
    if d < 2:
        raise DimensionMismatch("dimension must be at least 2")
    if len(hs) < d:
        raise NotAnArrangement(f"need at least {d} hyperplanes in R^{d}")

    part = partition_families(hs)
    basis = maximal_independent_subset(part.family_normals)
    if len(basis) < d:
        return NoIntersectionPoint(len(basis), d)

    if d == 2:
        lines = [canonical_line(h.normal[0], h.normal[1], h.offset, id=i) for i, h in enumerate(hs)]
        res = find_ordinary_point_2d(lines)
        return OrdinaryResultND(tuple(res.point), tuple(sorted(res.witnesses)), CASE3_ON_M)

    head = basis[: d - 2]
    constituents = [part.families[f][0] for f in head]
    used = set(head)
    remaining = [i for f, fam in enumerate(part.families) if f not in used for i in fam]
    tail_firsts = [part.families[f][0] for f in basis[d - 2:]]

    m = flat_from_hyperplanes([hs[i] for i in constituents], d)
    if m is None or m.dim != 2:
        raise HypothesisViolated("the chosen d-2 hyperplanes do not cut a 2-flat")
    lines, skipped = _trace(hs, remaining, m)
    _assert_tail_traces(lines, tail_firsts)
    provenance = CASE3_ON_M

    p = _pencil_point(lines)
    if p is not None:
        # every trace passes through one point of M: swap a constituent
        alt = next(((k, part.families[f][1]) for k, f in enumerate(head)
                    if len(part.families[f]) > 1), None)
        if alt is None:
            raise AllConcurrent("all hyperplanes pass through one point")
        k, member = alt
        constituents = list(constituents)
        constituents[k] = member
        m = flat_from_hyperplanes([hs[i] for i in constituents], d)
        if m is None or m.dim != 2:
            raise HypothesisViolated("the alternative d-2 hyperplanes do not cut a 2-flat")
        lines, skipped = _trace(hs, remaining, m)
        _assert_tail_traces(lines, tail_firsts)
        if _pencil_point(lines) is not None:
            raise HypothesisViolated("d hyperplanes share a line through both pencil points")
        provenance = CASE2_THEN_M_PRIME

    res = find_ordinary_point_2d(lines)
    point = m.at(res.point)
    sources = tuple(lines[w].id for w in res.witnesses)
    witnesses = tuple(sorted((*constituents, *sources)))
    return OrdinaryResultND(point, witnesses, provenance, skipped, tuple(constituents))


def _assert_tail_traces(lines: Sequence[Line2], tail_firsts: Sequence[int]) -> None:
    by_source = {l.id: l for l in lines}
    a, b = tail_firsts
    if a not in by_source or b not in by_source or by_source[a].is_parallel(by_source[b]):
        # normals independent of M's constituents cannot trace parallel or empty lines
        raise AssertionError("basis families trace degenerate lines on the 2-flat")
