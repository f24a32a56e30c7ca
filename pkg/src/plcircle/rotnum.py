"""Exact fixed-point solving and rotation numbers for PL circle maps.

Rational rotation numbers are certified by an exact periodic-point search;
irrational ones are only bracketed between Farey neighbours.  The
semi-conjugacy table is explicitly numeric, with stated tolerances.
"""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .circle import CirclePoint, frac_mod1
from .homeo import PLHomeo


@dataclass(frozen=True)
class FixedSet:
    """Exact solution set of h(x) = x, as maximal components."""

    full: bool
    points: Tuple[CirclePoint, ...]
    arcs: Tuple[Tuple[CirclePoint, CirclePoint], ...]  # closed arcs [start, end]

    @property
    def is_empty(self) -> bool:
        return not (self.full or self.points or self.arcs)


def fixed_points(h: PLHomeo) -> FixedSet:
    """Solve h(x) = x exactly, piece by piece, merging adjacent components."""
    xs = h._xs + [h._xs[0] + 1]
    ys = h._ys + [h._ys[0] + 1]
    intervals: List[Tuple[Fraction, Fraction]] = []  # closed, in lift coords
    for i, s in enumerate(h.slopes):
        a, b = xs[i], xs[i + 1]
        da = ys[i] - a
        db = ys[i + 1] - b
        if s == 1:
            if da == math.floor(da):
                intervals.append((a, b))
            continue
        lo, hi = min(da, db), max(da, db)
        for c in range(math.ceil(lo), math.floor(hi) + 1):
            # solve ys[i] + s (x - a) = x + c
            x = (c - ys[i] + s * a) / (s - 1)
            if a <= x <= b:
                intervals.append((x, x))
    if not intervals:
        return FixedSet(False, (), ())
    intervals.sort()
    merged = [list(intervals[0])]
    for a, b in intervals[1:]:
        if a <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], b)
        else:
            merged.append([a, b])
    # wrap-around merge: the last component may touch the first, one period up
    if len(merged) > 1 and merged[0][0] + 1 <= merged[-1][1]:
        merged[0][0] = merged[-1][0] - 1
        merged[0][1] = max(merged[0][1], merged[-1][1] - 1)
        merged.pop()
    if merged[0][1] - merged[0][0] >= 1:
        return FixedSet(True, (), ())
    points = []
    arcs = []
    for a, b in merged:
        pa = CirclePoint(frac_mod1(a))
        pb = CirclePoint(frac_mod1(b))
        if a == b:
            points.append(pa)
        else:
            arcs.append((pa, pb))
    return FixedSet(False, tuple(points), tuple(arcs))


@dataclass(frozen=True)
class RotNumResult:
    """Either an exact rational rotation number or a Farey bracket."""

    exact: Optional[Fraction] = None
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    depth: int = 0

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def __str__(self):
        if self.is_exact:
            return f"{self.exact.numerator}/{self.exact.denominator} (exact)"
        return f"[{self.lo}, {self.hi}] after {self.depth} refinements"


def _lift_iterate(h: PLHomeo, t: Fraction, n: int) -> Fraction:
    for _ in range(n):
        t = h.lift_eval(t)
    return t


def rotation_number(h: PLHomeo, max_q: int = 32, depth: int = 16) -> RotNumResult:
    """Exact rotation number when some h^q (q <= max_q) has a periodic point,
    otherwise a Farey bracket refined `depth` times by exact sign tests."""
    if max_q < 1 or depth < 1:
        raise ValueError("max_q and depth must be positive")
    power = h
    for q in range(1, max_q + 1):
        fs = fixed_points(power)
        if not fs.is_empty:
            if fs.full:
                u = Fraction(0)
            elif fs.points:
                u = fs.points[0].value
            else:
                u = fs.arcs[0][0].value
            p = _lift_iterate(h, u, q) - u
            assert p == math.floor(p), "winding displacement must be an integer"
            return RotNumResult(exact=frac_mod1(Fraction(int(p), q)))
        if q < max_q:
            power = power.compose(h)
    lo, hi = Fraction(0), Fraction(1)
    for d in range(depth):
        p = lo.numerator + hi.numerator
        q = lo.denominator + hi.denominator
        disp = _lift_iterate(h, Fraction(0), q)
        if disp > p:
            lo = Fraction(p, q)
        elif disp < p:
            hi = Fraction(p, q)
        else:
            return RotNumResult(exact=frac_mod1(Fraction(p, q)))
    return RotNumResult(lo=lo, hi=hi, depth=depth)


def semiconjugacy_table(h: PLHomeo, n_samples: int, n_iter: int
                        ) -> List[Tuple[CirclePoint, float]]:
    """Numeric approximation of the semi-conjugacy to a rotation, as the
    empirical distribution function of the orbit of 0.

    The table is weakly increasing with values in [0, 1]; it is a numeric
    demonstration, not a certified object.
    """
    if n_samples < 1 or n_iter < 1:
        raise ValueError("n_samples and n_iter must be positive")
    if not fixed_points(h).is_empty:
        raise ValueError("semi-conjugacy degenerates for maps with a fixed point")
    xs = [float(x) for x in h._xs]
    ys = [float(y) for y in h._ys]
    slopes = [float(s) for s in h.slopes]

    def eval_f(u: float) -> float:
        m = math.floor(u - xs[0])
        u -= m
        i = bisect.bisect_right(xs, u) - 1
        return (ys[i] + slopes[i] * (u - xs[i]) + m) % 1.0

    orbit = []
    t = 0.0
    for _ in range(n_iter):
        orbit.append(t)
        t = eval_f(t)
    orbit.sort()
    table = []
    for j in range(n_samples):
        x = Fraction(j, n_samples)
        count = bisect.bisect_left(orbit, float(x))
        table.append((CirclePoint(x), count / n_iter))
    return table
