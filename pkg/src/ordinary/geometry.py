"""Exact planar primitives: rational scalars, canonical lines, side tests and
affine frames.

Every coordinate is a :class:`fractions.Fraction` (or a plain ``int``, which
compares and hashes identically).  Lines are stored as primitive integer
triples so that identity reduces to tuple equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import IntEnum
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Optional, Sequence, Union

from .errors import DegenerateLine, IdenticalLines, WitnessOnLine

Scalar = Fraction
ScalarLike = Union[int, Fraction, str]

RED = "red"
BLUE = "blue"
COLORS = (RED, BLUE)

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_scalar(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into an exact rational.

    Decimal and exponent notation are rejected on purpose: every value in
    the file formats is meant to be exact as written.
    """
    m = _SCALAR_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_scalar(value: ScalarLike) -> str:
    return str(Fraction(value))


def to_scalar(value: ScalarLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"inexact or unsupported scalar type: {type(value).__name__}")


def check_color(color: Optional[str]) -> Optional[str]:
    if color is not None and color not in COLORS:
        raise ValueError(f"unknown color {color!r}; expected one of {COLORS}")
    return color


def primitive_integer_vector(values: Sequence[ScalarLike], sign_len: int) -> tuple[int, ...]:
    """Scale ``values`` to the unique primitive integer vector on its ray
    (up to sign), with the first nonzero among ``values[:sign_len]`` positive.

    Raises :class:`DegenerateLine` when that leading part is all zero.
    """
    if all(type(v) is int for v in values):
        ints = list(values)
    else:
        fracs = [to_scalar(v) for v in values]
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        ints = [f.numerator * (den // f.denominator) for f in fracs]
    lead = next((v for v in ints[:sign_len] if v != 0), 0)
    if lead == 0:
        raise DegenerateLine("direction/normal part is zero")
    g = 0
    for v in ints:
        g = gcd(g, v)
    if lead < 0:
        g = -g
    return tuple(v // g for v in ints)


class Point2(NamedTuple):
    x: Fraction
    y: Fraction

    def __str__(self) -> str:
        return f"({format_scalar(self.x)}, {format_scalar(self.y)})"


class Side(IntEnum):
    NEGATIVE = -1
    ON = 0
    POSITIVE = 1


@dataclass(frozen=True, slots=True)
class Line2:
    """The locus ``a*x + b*y = c`` in canonical form.

    Construct through :func:`canonical_line`; the raw constructor trusts its
    arguments.  ``color`` and ``id`` ride along but take no part in equality.
    """

    a: int
    b: int
    c: int
    color: Optional[str] = field(default=None, compare=False)
    id: Optional[int] = field(default=None, compare=False)

    @property
    def direction_key(self) -> tuple[int, int]:
        """``(a, b)`` reduced to lowest terms; equal exactly for parallel lines.

        The primitive triple alone does not decide parallelism: ``2x + 4y = 5``
        and ``x + 2y = 3`` are both primitive.
        """
        g = gcd(self.a, self.b)
        return (self.a // g, self.b // g)

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def is_parallel(self, other: Line2) -> bool:
        return self.a * other.b == other.a * self.b

    def contains(self, p: Point2) -> bool:
        return self.a * p.x + self.b * p.y == self.c

    def with_meta(self, color: Optional[str] = None, id: Optional[int] = None) -> Line2:
        return Line2(self.a, self.b, self.c, check_color(color), id)

    def __str__(self) -> str:
        return f"{self.a}x + {self.b}y = {self.c}"


def canonical_line(
    a: ScalarLike,
    b: ScalarLike,
    c: ScalarLike,
    color: Optional[str] = None,
    id: Optional[int] = None,
) -> Line2:
    ia, ib, ic = primitive_integer_vector((a, b, c), 2)
    return Line2(ia, ib, ic, check_color(color), id)


def line_through(p: Point2, q: Point2, color: Optional[str] = None, id: Optional[int] = None) -> Line2:
    if p == q:
        raise DegenerateLine("two distinct points are needed")
    a = q.y - p.y
    b = p.x - q.x
    return canonical_line(a, b, a * p.x + b * p.y, color, id)


def intersect_lines(l1: Line2, l2: Line2) -> Optional[Point2]:
    """Return the crossing of two distinct lines, or ``None`` if parallel."""
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        if l1.c == l2.c:
            raise IdenticalLines(f"{l1} given twice")
        return None
    return Point2(
        Fraction(l1.c * l2.b - l2.c * l1.b, det),
        Fraction(l1.a * l2.c - l2.a * l1.c, det),
    )


def side_of_line(l: Line2, p: Point2) -> Side:
    v = l.a * p.x + l.b * p.y - l.c
    if v > 0:
        return Side.POSITIVE
    if v < 0:
        return Side.NEGATIVE
    return Side.ON


@dataclass(frozen=True, slots=True)
class AffineMap2:
    """``(x, y) -> (m00*x + m01*y + t0, m10*x + m11*y + t1)``.

    Entries may be plain ints, which mix freely with fractions.
    """

    m00: Fraction
    m01: Fraction
    m10: Fraction
    m11: Fraction
    t0: Fraction = Fraction(0)
    t1: Fraction = Fraction(0)

    @property
    def det(self) -> Fraction:
        return self.m00 * self.m11 - self.m01 * self.m10

    def __call__(self, p: Point2) -> Point2:
        return Point2(
            self.m00 * p.x + self.m01 * p.y + self.t0,
            self.m10 * p.x + self.m11 * p.y + self.t1,
        )

    def inverse(self) -> AffineMap2:
        det = self.det
        i00 = Fraction(self.m11) / det
        i01 = Fraction(-self.m01) / det
        i10 = Fraction(-self.m10) / det
        i11 = Fraction(self.m00) / det
        return AffineMap2(
            i00, i01, i10, i11,
            -(i00 * self.t0 + i01 * self.t1),
            -(i10 * self.t0 + i11 * self.t1),
        )

    def compose(self, inner: AffineMap2) -> AffineMap2:
        """``self ∘ inner``."""
        return AffineMap2(
            self.m00 * inner.m00 + self.m01 * inner.m10,
            self.m00 * inner.m01 + self.m01 * inner.m11,
            self.m10 * inner.m00 + self.m11 * inner.m10,
            self.m10 * inner.m01 + self.m11 * inner.m11,
            self.m00 * inner.t0 + self.m01 * inner.t1 + self.t0,
            self.m10 * inner.t0 + self.m11 * inner.t1 + self.t1,
        )

    def apply_line(self, l: Line2) -> Line2:
        """Image of ``l`` under the map, canonical, keeping color and id."""
        # Pull back through the adjugate so integer inputs stay integral.
        a = l.a * self.m11 - l.b * self.m10
        b = -l.a * self.m01 + l.b * self.m00
        c = l.c * self.det + a * self.t0 + b * self.t1
        return canonical_line(a, b, c, l.color, l.id)

    def is_identity(self) -> bool:
        return (self.m00, self.m01, self.m10, self.m11, self.t0, self.t1) == (1, 0, 0, 1, 0, 0)


IDENTITY = AffineMap2(Fraction(1), Fraction(0), Fraction(0), Fraction(1))


def base_frame(l0: Line2, witness: Point2) -> AffineMap2:
    """Affine map taking ``l0`` onto the x-axis with ``witness`` above it.

    The new y-coordinate is the signed residual ``±(a*x + b*y - c)``, so it
    orders points by their distance from ``l0``; the new x-coordinate runs
    along ``l0``.
    """
    s = side_of_line(l0, witness)
    if s is Side.ON:
        raise WitnessOnLine(f"{witness} lies on {l0}")
    a, b, c = l0.a, l0.b, l0.c
    # plain ints keep apply_line on the integer fast path
    return AffineMap2(b, -a, s * a, s * b, 0, -s * c)
