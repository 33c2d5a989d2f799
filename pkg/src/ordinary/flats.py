"""Hyperplanes, affine flats and exact linear algebra in R^d."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch
from .geometry import ScalarLike, primitive_integer_vector, to_scalar

# Raise to allow larger ambient dimensions; per-step costs grow polynomially in d.
MAX_DIMENSION = 16

PointD = tuple  # tuple[Fraction, ...]
Vector = tuple


def _check_dimension(d: int) -> None:
    if d < 1 or d > MAX_DIMENSION:
        raise DimensionMismatch(f"dimension {d} outside 1..{MAX_DIMENSION}")


@dataclass(frozen=True, slots=True)
class HyperplaneD:
    """The locus ``normal . x = offset`` with a primitive integer
    ``(normal, offset)`` whose first nonzero normal entry is positive."""

    normal: tuple[int, ...]
    offset: int
    id: Optional[int] = field(default=None, compare=False)

    @property
    def dim(self) -> int:
        return len(self.normal)

    def evaluate(self, point: Sequence[ScalarLike]) -> Fraction:
        return sum((n * x for n, x in zip(self.normal, point)), Fraction(0)) - self.offset

    def contains(self, point: Sequence[ScalarLike]) -> bool:
        return self.evaluate(point) == 0

    @property
    def direction(self) -> tuple[int, ...]:
        """The normal reduced to a primitive vector; equal exactly for
        parallel hyperplanes."""
        g = 0
        for v in self.normal:
            g = gcd(g, v)
        return tuple(v // g for v in self.normal)

    def is_parallel(self, other: HyperplaneD) -> bool:
        return self.direction == other.direction

    def __str__(self) -> str:
        terms = " + ".join(f"{c}*x{i}" for i, c in enumerate(self.normal) if c)
        return f"{terms} = {self.offset}"


def canonical_hyperplane(
    normal: Sequence[ScalarLike], offset: ScalarLike, id: Optional[int] = None
) -> HyperplaneD:
    d = len(normal)
    _check_dimension(d)
    v = primitive_integer_vector((*normal, offset), d)
    return HyperplaneD(v[:d], v[d], id)


def rref(rows: Sequence[Sequence[ScalarLike]], ncols: Optional[int] = None):
    """Reduced row echelon form over the rationals.

    Only the first ``ncols`` columns are used as pivot candidates, which lets
    callers reduce an augmented matrix.  Returns ``(rows, pivot_columns)``;
    the first ``len(pivot_columns)`` rows carry the pivots, any remaining rows
    are zero in the pivot-candidate columns.
    """
    m = [[to_scalar(x) for x in r] for r in rows]
    if not m:
        return [], []
    width = len(m[0])
    ncols = width if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][col]
        if piv != 1:
            m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m, pivots


def solve_affine(
    rows: Sequence[Sequence[ScalarLike]], rhs: Sequence[ScalarLike], nvars: int
) -> Optional[tuple[PointD, list[Vector]]]:
    """Solve ``rows . x = rhs``; return ``(particular, nullspace basis)``
    or ``None`` when inconsistent."""
    aug = [[*r, b] for r, b in zip(rows, rhs)]
    if not aug:
        zero = tuple(Fraction(0) for _ in range(nvars))
        basis = [tuple(int(i == j) for j in range(nvars)) for i in range(nvars)]
        return zero, basis
    red, pivots = rref(aug, nvars)
    if any(row[nvars] != 0 for row in red[len(pivots):]):
        return None
    point = [Fraction(0)] * nvars
    for row, col in zip(red, pivots):
        point[col] = row[nvars]
    free = [c for c in range(nvars) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * nvars
        v[fc] = Fraction(1)
        for row, col in zip(red, pivots):
            v[col] = -row[fc]
        basis.append(_integer_direction(v))
    return tuple(point), basis


def _integer_direction(v: Sequence[Fraction]) -> Vector:
    return primitive_integer_vector(v, len(v))


def solve_point(hs: Sequence[HyperplaneD]) -> Optional[PointD]:
    """Common point of ``d`` hyperplanes in R^d, or ``None`` when their
    normals are dependent."""
    if not hs:
        raise DimensionMismatch("need at least one hyperplane")
    d = hs[0].dim
    if len(hs) != d or any(h.dim != d for h in hs):
        raise DimensionMismatch(f"expected {d} hyperplanes of dimension {d}")
    sol = solve_affine([h.normal for h in hs], [h.offset for h in hs], d)
    if sol is None or sol[1]:
        return None
    return sol[0]


def maximal_independent_subset(vectors: Sequence[Sequence[ScalarLike]]) -> list[int]:
    """Indices of a maximal linearly independent subset of ``vectors``.

    Keeps a working matrix of at most ``d`` rows.  Each round fills the empty
    slots with the next unread vectors, reduces only those new rows against
    the retained ones, and discards the rows that vanish.  Stops as soon as
    ``d`` independent rows are held or the input runs out, so the cost is
    linear in ``len(vectors)`` for fixed ``d``.
    """
    if not vectors:
        return []
    d = len(vectors[0])
    if any(len(v) != d for v in vectors):
        raise DimensionMismatch("vectors of different lengths")
    # rows[k] is in reduced form with pivot column pivots[k] normalised to 1
    rows: list[list[Fraction]] = []
    pivots: list[int] = []
    owners: list[int] = []
    nxt = 0
    n = len(vectors)
    while len(rows) < d and nxt < n:
        batch = range(nxt, min(n, nxt + d - len(rows)))
        nxt = batch.stop
        for idx in batch:
            row = [to_scalar(x) for x in vectors[idx]]
            for prow, pc in zip(rows, pivots):
                f = row[pc]
                if f != 0:
                    row = [x - f * y for x, y in zip(row, prow)]
            pc = next((j for j, x in enumerate(row) if x != 0), None)
            if pc is None:
                continue  # zero row: its slot is refilled next round
            piv = row[pc]
            row = [x / piv for x in row]
            for k, prow in enumerate(rows):
                f = prow[pc]
                if f != 0:
                    rows[k] = [x - f * y for x, y in zip(prow, row)]
            rows.append(row)
            pivots.append(pc)
            owners.append(idx)
    return sorted(owners)


@dataclass(frozen=True, slots=True)
class Flat:
    """``base_point + span(directions)``; a point is a Flat with no directions."""

    base_point: PointD
    directions: tuple[Vector, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.directions)

    @property
    def ambient_dim(self) -> int:
        return len(self.base_point)

    def at(self, coords: Sequence[ScalarLike]) -> PointD:
        """Point with the given affine coordinates along ``directions``."""
        if len(coords) != self.dim:
            raise DimensionMismatch("wrong number of flat coordinates")
        p = list(self.base_point)
        for t, v in zip(coords, self.directions):
            t = to_scalar(t)
            for i, x in enumerate(v):
                p[i] += t * x
        return tuple(p)

    def coordinates_of(self, point: Sequence[ScalarLike]) -> Optional[tuple[Fraction, ...]]:
        """Affine coordinates of ``point`` on the flat, or ``None`` if off it."""
        d = self.ambient_dim
        if len(point) != d:
            raise DimensionMismatch("point of wrong dimension")
        rows = [[v[i] for v in self.directions] for i in range(d)]
        rhs = [to_scalar(point[i]) - self.base_point[i] for i in range(d)]
        sol = solve_affine(rows, rhs, self.dim)
        if sol is None:
            return None
        return sol[0]

    def contains(self, point: Sequence[ScalarLike]) -> bool:
        return self.coordinates_of(point) is not None

    def trace(self, h: HyperplaneD) -> tuple[tuple[int, ...], Fraction]:
        """Restriction of ``h`` to the flat's coordinates: ``(coeffs, rhs)``
        with ``coeffs . t = rhs`` for points ``at(t)``."""
        coeffs = tuple(sum(n * x for n, x in zip(h.normal, v)) for v in self.directions)
        rhs = h.offset - sum((n * x for n, x in zip(h.normal, self.base_point)), Fraction(0))
        return coeffs, rhs


def flat_from_hyperplanes(hs: Iterable[HyperplaneD], d: Optional[int] = None) -> Optional[Flat]:
    hs = list(hs)
    if d is None:
        if not hs:
            raise DimensionMismatch("dimension unknown for an empty set")
        d = hs[0].dim
    if any(h.dim != d for h in hs):
        raise DimensionMismatch("hyperplanes of different dimensions")
    sol = solve_affine([h.normal for h in hs], [h.offset for h in hs], d)
    if sol is None:
        return None
    return Flat(sol[0], tuple(sol[1]))


def flat_of_hyperplane(h: HyperplaneD) -> Flat:
    flat = flat_from_hyperplanes([h])
    assert flat is not None
    return flat


def intersect_flats(f1: Flat, f2: Flat) -> Optional[Flat]:
    d = f1.ambient_dim
    if f2.ambient_dim != d:
        raise DimensionMismatch("flats live in different dimensions")
    k1, k2 = f1.dim, f2.dim
    # f1.base + D1 s = f2.base + D2 t  <=>  [D1 | -D2] (s, t) = f2.base - f1.base
    rows = [
        [*(v[i] for v in f1.directions), *(-v[i] for v in f2.directions)]
        for i in range(d)
    ]
    rhs = [f2.base_point[i] - f1.base_point[i] for i in range(d)]
    sol = solve_affine(rows, rhs, k1 + k2)
    if sol is None:
        return None
    particular, null = sol
    base = f1.at(particular[:k1]) if k1 else f1.base_point
    directions = []
    for v in null:
        s = v[:k1]
        w = [sum((si * dv[i] for si, dv in zip(s, f1.directions)), Fraction(0)) for i in range(d)]
        directions.append(_integer_direction(w))
    return Flat(tuple(Fraction(x) for x in base), tuple(directions))
