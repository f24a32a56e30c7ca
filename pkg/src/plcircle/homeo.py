"""Canonical orientation-preserving piecewise linear circle homeomorphisms.

A map is stored by the vertices of one period of its lift graph: pairs
(x_i, y_i) with x_0 in [0,1), x strictly increasing over less than one
period, y_0 in [0,1), y strictly increasing, and an implicit closing
vertex (x_0 + 1, y_0 + 1).  Canonical form: every stored vertex is a
genuine breakpoint (adjacent slopes differ cyclically) and the base
vertex is the smallest breakpoint; rotations are stored as the single
vertex (0, alpha).
"""
from __future__ import annotations

import bisect
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence, Tuple

from .circle import CirclePoint, frac_mod1

Vertex = Tuple[Fraction, Fraction]


class InvalidHomeoError(ValueError):
    """Data does not define a canonical PL circle homeomorphism."""


def _lift_cyclic(values: Sequence[Fraction]):
    """Lift circle values (first taken as base) to an increasing sequence."""
    base = values[0]
    out = [base]
    for v in values[1:]:
        out.append(v + 1 if v < base else v)
    for a, b in zip(out, out[1:]):
        if not a < b:
            raise InvalidHomeoError(
                "vertex images are not in matching cyclic order "
                "(map is not an orientation-preserving homeomorphism)")
    return out


def _canonical(pairs) -> Tuple[Vertex, ...]:
    """Canonicalize circle-coordinate vertex pairs into lift vertices.

    Merges vertices where the slope does not change and rebases at the
    smallest breakpoint; a map with no breakpoint collapses to a rotation.
    """
    pairs = sorted({(frac_mod1(x), frac_mod1(y)) for x, y in pairs})
    if not pairs:
        raise InvalidHomeoError("at least one vertex is required")
    xs = [p[0] for p in pairs]
    ys = [p[1] for p in pairs]
    if len(set(xs)) != len(xs):
        raise InvalidHomeoError("two vertices share the same x coordinate")
    if len(set(ys)) != len(ys):
        raise InvalidHomeoError("two vertices share the same image (map not injective)")
    ylift = _lift_cyclic(ys)
    k = len(pairs)
    ext_x = xs + [xs[0] + 1]
    ext_y = ylift + [ylift[0] + 1]
    slopes = [(ext_y[i + 1] - ext_y[i]) / (ext_x[i + 1] - ext_x[i]) for i in range(k)]
    keep = [i for i in range(k) if slopes[i - 1] != slopes[i]]
    if not keep:
        # constant slope around the circle forces slope 1: a rotation
        return ((Fraction(0), frac_mod1(ys[0] - xs[0])),)
    kxs = [xs[i] for i in keep]
    kys = _lift_cyclic([ys[i] for i in keep])
    return tuple(zip(kxs, kys))


@dataclass(frozen=True)
class PLHomeo:
    """Orientation-preserving PL circle homeomorphism in canonical form."""

    verts: Tuple[Vertex, ...]

    def __post_init__(self):
        v = self.verts
        if not v:
            raise InvalidHomeoError("empty vertex list")
        xs = [p[0] for p in v]
        ys = [p[1] for p in v]
        if not 0 <= xs[0] < 1:
            raise InvalidHomeoError("base x coordinate not in [0, 1)")
        if not 0 <= ys[0] < 1:
            raise InvalidHomeoError("base y coordinate not in [0, 1)")
        for a, b in zip(xs, xs[1:]):
            if not a < b:
                raise InvalidHomeoError("x coordinates not strictly increasing")
        for a, b in zip(ys, ys[1:]):
            if not a < b:
                raise InvalidHomeoError("y coordinates not strictly increasing")
        if xs[-1] >= xs[0] + 1:
            raise InvalidHomeoError("x coordinates span a full period or more")
        if ys[-1] >= ys[0] + 1:
            raise InvalidHomeoError("y coordinates span a full period or more")
        k = len(v)
        slopes = self.slopes
        for s in slopes:
            if s <= 0:
                raise InvalidHomeoError("non-positive slope")
        if k == 1:
            if xs[0] != 0:
                raise InvalidHomeoError("rotation must be based at 0")
        else:
            for i in range(k):
                if slopes[i - 1] == slopes[i]:
                    raise InvalidHomeoError(
                        f"removable vertex at x={xs[i]} (equal adjacent slopes)")

    # -- structure ---------------------------------------------------------

    @cached_property
    def _xs(self):
        return [p[0] for p in self.verts]

    @cached_property
    def _ys(self):
        return [p[1] for p in self.verts]

    @cached_property
    def slopes(self) -> Tuple[Fraction, ...]:
        xs = [p[0] for p in self.verts] + [self.verts[0][0] + 1]
        ys = [p[1] for p in self.verts] + [self.verts[0][1] + 1]
        return tuple((ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])
                     for i in range(len(self.verts)))

    @property
    def breakpoints(self) -> Tuple[CirclePoint, ...]:
        if len(self.verts) == 1:
            return ()
        return tuple(CirclePoint(frac_mod1(x)) for x in self._xs)

    @property
    def is_identity(self) -> bool:
        return self.verts == ((Fraction(0), Fraction(0)),)

    @property
    def is_rotation(self) -> bool:
        return len(self.verts) == 1

    @property
    def rotation_amount(self) -> Fraction:
        if not self.is_rotation:
            raise ValueError("not a rotation")
        return self.verts[0][1]

    # -- evaluation --------------------------------------------------------

    def lift_eval(self, t: Fraction) -> Fraction:
        """Evaluate the canonical lift (the one with value of x_0 in [0,1))."""
        x0 = self._xs[0]
        m = math.floor(t - x0)
        u = t - m
        i = bisect.bisect_right(self._xs, u) - 1
        return self._ys[i] + self.slopes[i] * (u - self._xs[i]) + m

    def lift_eval_inverse(self, t: Fraction) -> Fraction:
        y0 = self._ys[0]
        m = math.floor(t - y0)
        u = t - m
        i = bisect.bisect_right(self._ys, u) - 1
        return self._xs[i] + (u - self._ys[i]) / self.slopes[i] + m

    def eval(self, p: CirclePoint) -> CirclePoint:
        return CirclePoint(frac_mod1(self.lift_eval(p.value)))

    def eval_inverse(self, p: CirclePoint) -> CirclePoint:
        return CirclePoint(frac_mod1(self.lift_eval_inverse(p.value)))

    def left_right_slopes(self, p: CirclePoint) -> Tuple[Fraction, Fraction]:
        """Exact (left derivative, right derivative) at p."""
        x0 = self._xs[0]
        u = p.value - math.floor(p.value - x0)
        i = bisect.bisect_right(self._xs, u) - 1
        if u == self._xs[i]:
            return self.slopes[i - 1], self.slopes[i]
        return self.slopes[i], self.slopes[i]

    def jump(self, p: CirclePoint) -> Fraction:
        """Derivative jump D+h(p) / D-h(p); equals 1 off the breakpoints."""
        left, right = self.left_right_slopes(p)
        return right / left

    # -- group operations --------------------------------------------------

    def compose(self, other: "PLHomeo") -> "PLHomeo":
        """self o other, canonicalized."""
        cuts = {frac_mod1(x) for x in other._xs}
        cuts.update(frac_mod1(other.lift_eval_inverse(frac_mod1(x)))
                    for x in self._xs)
        pairs = [(c, frac_mod1(self.lift_eval(frac_mod1(other.lift_eval(c)))))
                 for c in cuts]
        return PLHomeo(_canonical(pairs))

    def inverse(self) -> "PLHomeo":
        pairs = [(frac_mod1(y), frac_mod1(x)) for x, y in self.verts]
        return PLHomeo(_canonical(pairs))

    def iterate(self, n: int) -> "PLHomeo":
        """n-th iterate (negative n iterates the inverse), by sequential composition."""
        if n == 0:
            return identity()
        base = self if n > 0 else self.inverse()
        result = base
        for _ in range(abs(n) - 1):
            result = base.compose(result)
        return result


def from_lift_vertices(pairs) -> PLHomeo:
    """Build a canonical map from lift vertices, closing vertex optional."""
    pairs = [(Fraction(x), Fraction(y)) for x, y in pairs]
    if len(pairs) >= 2 and pairs[-1] == (pairs[0][0] + 1, pairs[0][1] + 1):
        pairs = pairs[:-1]
    return PLHomeo(_canonical(pairs))


def rotation(alpha) -> PLHomeo:
    """The rotation x -> x + alpha mod 1."""
    return PLHomeo(((Fraction(0), frac_mod1(alpha)),))


def identity() -> PLHomeo:
    return rotation(0)


@dataclass(frozen=True)
class ExoticParams:
    """Parameters (A, lambda) of an element of the exotic circle S_A."""

    A: Fraction
    lam: Fraction

    def __post_init__(self):
        object.__setattr__(self, "A", Fraction(self.A))
        object.__setattr__(self, "lam", Fraction(self.lam))
        if not self.A > 1:
            raise ValueError(f"modulus A must exceed 1, got {self.A}")
        if not 1 < self.lam < self.A:
            raise ValueError(f"lambda must lie strictly between 1 and A, got {self.lam}")


def exotic_element(e: ExoticParams) -> PLHomeo:
    """Multiplication by lambda on [1/(A-1), A/(A-1)] with wrap x ~ Ax,
    translated to standard circle coordinates.

    The result has two pieces of slopes lambda and lambda/A, with
    breakpoint jumps 1/A and A.
    """
    A, lam = e.A, e.lam
    y0 = (lam - 1) / (A - 1)
    xstar = (A - lam) / (lam * (A - 1))
    return PLHomeo(_canonical([(Fraction(0), y0), (xstar, Fraction(0))]))


def random_pl(seed: int, k: int, denom_bound: int) -> PLHomeo:
    """Deterministic pseudo-random canonical map with at most k breakpoints
    and all vertex coordinates with denominators at most denom_bound."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if denom_bound < 1:
        raise ValueError("denom_bound must be positive")
    rng = random.Random(seed)

    def rand_frac() -> Fraction:
        q = rng.randint(1, denom_bound)
        return Fraction(rng.randrange(q), q)

    def distinct(n):
        vals = set()
        while len(vals) < n:
            vals.add(rand_frac())
        return sorted(vals)

    if k == 0:
        return rotation(rand_frac())
    xs = distinct(k)
    ys = distinct(k)
    r = rng.randrange(k)
    pairs = [(xs[i], ys[(i + r) % k]) for i in range(k)]
    return PLHomeo(_canonical(pairs))
