"""Small builders shared by the test modules."""

from fractions import Fraction

from ordinary import Pseudoline, canonical_line


def y_eq(m, k=0, color=None, id=None):
    """The line y = m*x + k."""
    return canonical_line(Fraction(m), -1, -Fraction(k), color, id)


def x_eq(k, color=None, id=None):
    return canonical_line(1, 0, k, color, id)


def numbered(lines):
    return [l.with_meta(l.color, i) for i, l in enumerate(lines)]


def straight(m, k=0, color=None, id=None):
    return Pseudoline.straight(Fraction(m), Fraction(k), color, id)


def F(text):
    return Fraction(text)
