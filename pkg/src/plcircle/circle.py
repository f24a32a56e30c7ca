"""Exact rational arithmetic on the circle R/Z: points, arcs, cyclic order.

Everything in this module is pure and exact; no floating point is used.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

RationalLike = Union[Fraction, int]


def frac_mod1(q: RationalLike) -> Fraction:
    """Return q - floor(q) as an exact Fraction in [0, 1)."""
    q = Fraction(q)
    return q - math.floor(q)


@dataclass(frozen=True, order=True)
class CirclePoint:
    """A point of R/Z with an exact rational coordinate in [0, 1)."""

    value: Fraction

    def __post_init__(self):
        if not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", Fraction(self.value))
        if not 0 <= self.value < 1:
            raise ValueError(f"circle coordinate {self.value} not in [0, 1)")

    def __add__(self, other: RationalLike) -> "CirclePoint":
        return CirclePoint(frac_mod1(self.value + Fraction(other)))

    def __sub__(self, other: "CirclePoint") -> Fraction:
        """Positively oriented displacement from other to self, in [0, 1)."""
        return frac_mod1(self.value - other.value)

    def __str__(self):
        return str(self.value)


def reduce_mod1(q: RationalLike) -> CirclePoint:
    """Project an arbitrary rational to the circle."""
    return CirclePoint(frac_mod1(q))


@dataclass(frozen=True)
class Arc:
    """Open, positively oriented arc from start to end.

    With full=True the arc is the whole circle punctured at start
    (start == end is only allowed in that case).
    """

    start: CirclePoint
    end: CirclePoint
    full: bool = False

    def __post_init__(self):
        if self.start == self.end and not self.full:
            raise ValueError("degenerate arc: start == end without full flag")
        if self.full and self.start != self.end:
            raise ValueError("full arc must have start == end")

    @property
    def length(self) -> Fraction:
        if self.full:
            return Fraction(1)
        return self.end - self.start


def arc_contains(a: Arc, p: CirclePoint) -> bool:
    """True iff p lies strictly inside the open arc a."""
    if a.full:
        return p != a.start
    off = p - a.start
    return 0 < off < (a.end - a.start)


def cyclic_between(a: CirclePoint, b: CirclePoint, c: CirclePoint) -> bool:
    """True iff b lies in the open positively oriented arc from a to c."""
    if a == b or b == c or a == c:
        raise ValueError("cyclic_between requires three distinct points")
    return 0 < (b - a) < (c - a)
