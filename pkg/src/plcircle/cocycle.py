"""Derivative-jump cocycle, the induced affine isometric action on finitely
supported vectors, and breakpoint-growth / orbit-norm experiments.

Jumps are stored multiplicatively as exact positive rationals; logarithms
enter only when a norm is computed.  The additive coordinate of a vector
at x is log of the stored value, so the zero vector is the empty map.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .circle import Arc, CirclePoint
from .homeo import PLHomeo
from .rotnum import fixed_points


@dataclass(frozen=True)
class FiniteVector:
    """Finitely supported map CirclePoint -> positive rational, value 1 pruned."""

    entries: Tuple[Tuple[CirclePoint, Fraction], ...]

    def __post_init__(self):
        for p, v in self.entries:
            if v <= 0:
                raise ValueError(f"non-positive value {v} at {p}")
            if v == 1:
                raise ValueError(f"trivial value 1 stored at {p}")

    @classmethod
    def from_dict(cls, d: Dict[CirclePoint, Fraction]) -> "FiniteVector":
        items = sorted((p, Fraction(v)) for p, v in d.items() if Fraction(v) != 1)
        return cls(tuple(items))

    @classmethod
    def empty(cls) -> "FiniteVector":
        return cls(())

    @property
    def support(self) -> Tuple[CirclePoint, ...]:
        return tuple(p for p, _ in self.entries)

    def value_at(self, p: CirclePoint) -> Fraction:
        for q, v in self.entries:
            if q == p:
                return v
        return Fraction(1)

    def as_dict(self) -> Dict[CirclePoint, Fraction]:
        return dict(self.entries)

    def quotient(self, other: "FiniteVector") -> "FiniteVector":
        """Pointwise multiplicative quotient self / other (additive difference)."""
        d = self.as_dict()
        for p, v in other.entries:
            d[p] = d.get(p, Fraction(1)) / v
        return FiniteVector.from_dict(d)

    def product(self) -> Fraction:
        out = Fraction(1)
        for _, v in self.entries:
            out *= v
        return out


# A JumpVector is a FiniteVector produced from a PLHomeo; its values
# multiply to 1 by telescoping of the one-sided slopes around the circle.
JumpVector = FiniteVector


def jump_cocycle(h: PLHomeo) -> JumpVector:
    """Jump vector of h: support BP(h), value D+h(x)/D-h(x)."""
    return FiniteVector.from_dict({p: h.jump(p) for p in h.breakpoints})


def affine_apply(h: PLHomeo, v: FiniteVector) -> FiniteVector:
    """Affine isometric action: new value at x is v(h^{-1}(x)) * jump(h^{-1}, x)."""
    hinv = h.inverse()
    jv = jump_cocycle(hinv)
    candidates = {h.eval(p) for p in v.support}
    candidates.update(jv.support)
    d = {x: v.value_at(hinv.eval(x)) * jv.value_at(x) for x in candidates}
    return FiniteVector.from_dict(d)


def _log(q: Fraction) -> float:
    return math.log(q.numerator) - math.log(q.denominator)


def l2_norm_sq(v: FiniteVector) -> float:
    """Squared l2 norm of the additive coordinates: sum of (log value)^2."""
    return sum(_log(val) ** 2 for _, val in v.entries)


def orbit_norm_seq(f: PLHomeo, N: int) -> List[float]:
    """Squared norms of the orbit of the zero vector: entry n-1 is
    ||rho(f^n) 0||^2, computed incrementally and exactly."""
    if N < 1:
        raise ValueError("N must be at least 1")
    out = []
    v = FiniteVector.empty()
    for _ in range(N):
        v = affine_apply(f, v)
        out.append(l2_norm_sq(v))
    return out


def breakpoint_growth(f: PLHomeo, N: int) -> List[int]:
    """Entry n-1 is the breakpoint count of the canonical form of f^n."""
    if N < 1:
        raise ValueError("N must be at least 1")
    out = []
    cur = f
    for n in range(N):
        out.append(len(cur.breakpoints))
        if n + 1 < N:
            cur = f.compose(cur)
    return out


@dataclass(frozen=True)
class GrowthParams:
    """Constants controlling the linear breakpoint-growth lower bound
    for a map contracting on a component of its open support."""

    component: Arc
    c0: float                      # log of the right slope at the left endpoint
    c1: float                      # log of the left slope at the right endpoint
    mu: float                      # max |log s| over nontrivial superset values
    beta: float                    # min |log s| over nontrivial superset values
    jump_value_superset: frozenset  # all subset products of the jump values
    analyzed_inverse: bool         # True if the bound was derived from f^{-1}


def _subset_products(values) -> frozenset:
    prods = {Fraction(1)}
    for v in values:
        prods |= {p * v for p in prods}
    return frozenset(prods)


def _contracting_component(f: PLHomeo) -> "Arc | None":
    """A component (x0, x1) of the open support on which f(y) < y, or None."""
    fs = fixed_points(f)
    if fs.full or (not fs.points and not fs.arcs):
        return None
    # closed fixed components in cyclic order, as (start, end) lift intervals
    comps = [(p.value, p.value) for p in fs.points]
    comps += [(a.value, b.value + (1 if b.value < a.value else 0)) for a, b in fs.arcs]
    comps.sort()
    n = len(comps)
    for i in range(n):
        a = comps[i][1]                       # right end of this fixed component
        b = comps[(i + 1) % n][0] + (1 if i + 1 == n else 0)  # next left end, lifted
        if b == a:
            continue
        mid = (a + b) / 2
        # f maps (a, b) to itself; lift the image next to mid
        fm = f.lift_eval(mid)
        fm -= math.floor(fm - a)
        if fm < mid:
            start = CirclePoint(a - math.floor(a))
            end = CirclePoint(b - math.floor(b))
            return Arc(start, end, full=(start == end))
    return None


def growth_params(f: PLHomeo) -> GrowthParams:
    """Derive the growth constants from f (or, if f expands on every support
    component, from f^{-1}); requires a fixed point and f != identity."""
    if f.is_identity:
        raise ValueError("identity map has no support component")
    fs = fixed_points(f)
    if fs.full:
        raise ValueError("identity map has no support component")
    if not fs.points and not fs.arcs:
        raise ValueError("map has no fixed point")
    analyzed_inverse = False
    g = f
    comp = _contracting_component(g)
    if comp is None:
        g = f.inverse()
        analyzed_inverse = True
        comp = _contracting_component(g)
    if comp is None:
        raise ValueError("no contracting support component found")
    _, right_slope_at_x0 = g.left_right_slopes(comp.start)
    left_slope_at_x1, _ = g.left_right_slopes(comp.end)
    superset = _subset_products(g.jump(p) for p in g.breakpoints)
    logs = [abs(_log(s)) for s in superset if s != 1]
    if not logs:
        raise ValueError("map has no breakpoints")
    return GrowthParams(
        component=comp,
        c0=_log(right_slope_at_x0),
        c1=_log(left_slope_at_x1),
        mu=max(logs),
        beta=min(logs),
        jump_value_superset=superset,
        analyzed_inverse=analyzed_inverse,
    )
