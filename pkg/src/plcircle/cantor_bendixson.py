"""Symbolic countable compact subsets of the circle and their
Cantor-Bendixson derivatives and (finite) ranks.

A set is a finite tree: leaves are isolated rational points, limit nodes
are an apex point together with ratio-scaled copies of a child set placed
in nested punctured one-sided neighbourhoods converging to the apex.  Only
finite ranks are representable; transfinite towers are out of scope.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Tuple, Union

from .circle import CirclePoint, frac_mod1

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class Leaf:
    point: CirclePoint


@dataclass(frozen=True)
class Limit:
    apex: CirclePoint
    child: "SymbolicSet"
    direction: str
    ratio: Fraction

    def __post_init__(self):
        if self.direction not in (LEFT, RIGHT):
            raise ValueError(f"direction must be 'left' or 'right', got {self.direction!r}")
        if not 0 < self.ratio < 1:
            raise ValueError(f"ratio must lie in (0, 1), got {self.ratio}")
        if not self.child.nodes:
            raise ValueError("limit node requires a nonempty child set")


Node = Union[Leaf, Limit]


@dataclass(frozen=True)
class SymbolicSet:
    nodes: Tuple[Node, ...]

    @classmethod
    def empty(cls) -> "SymbolicSet":
        return cls(())

    @property
    def is_empty(self) -> bool:
        return not self.nodes


def realize(S: SymbolicSet, depth: int) -> FrozenSet[Fraction]:
    """Realized points at finite depth: each limit node contributes its apex
    and `depth` scaled copies of its child, each placed in the middle half
    of the slot (ratio^{n+1}, ratio^n] on the chosen side of the apex."""
    pts = set()
    for node in S.nodes:
        if isinstance(node, Leaf):
            pts.add(node.point.value)
        else:
            pts.add(node.apex.value)
            child_pts = realize(node.child, depth)
            r = node.ratio
            sign = 1 if node.direction == RIGHT else -1
            for n in range(1, depth + 1):
                low = r ** (n + 1)
                width = r ** n - low
                for t in child_pts:
                    off = low + width * (1 + 2 * t) / 4
                    pts.add(frac_mod1(node.apex.value + sign * off))
    return frozenset(pts)


def validate_realization(S: SymbolicSet, depth: int = 3) -> None:
    """Check that all constituents realize pairwise distinct points at the
    given depth (beyond it, the ratio bounds keep copies disjoint)."""
    total = 0

    def count(node: Node) -> int:
        if isinstance(node, Leaf):
            return 1
        per_copy = sum(count(c) for c in node.child.nodes)
        return 1 + depth * per_copy

    for node in S.nodes:
        total += count(node)
    if len(realize(S, depth)) != total:
        raise ValueError(f"realized points collide at depth {depth}")


def cb_derivative(S: SymbolicSet) -> SymbolicSet:
    """Accumulation points: leaves are dropped, limit nodes keep their apex
    over the derived child (collapsing to a leaf when the child derives to
    the empty set)."""
    nodes: List[Node] = []
    for node in S.nodes:
        if isinstance(node, Leaf):
            continue
        child = cb_derivative(node.child)
        if child.is_empty:
            nodes.append(Leaf(node.apex))
        else:
            nodes.append(Limit(node.apex, child, node.direction, node.ratio))
    return SymbolicSet(tuple(nodes))


@dataclass(frozen=True)
class CBRank:
    rank: int
    top_finite_set_size: int


def cb_rank(S: SymbolicSet) -> CBRank:
    """Iterate the derivative until empty; the rank is the iteration count
    and the last nonempty derivative is a finite set whose size is reported."""
    rank = 0
    cur = S
    last_size = 0
    while not cur.is_empty:
        last_size = len({node.point.value if isinstance(node, Leaf) else node.apex.value
                         for node in cur.nodes})
        cur = cb_derivative(cur)
        rank += 1
    return CBRank(rank=rank, top_finite_set_size=last_size)


def structural_rank(S: SymbolicSet) -> int:
    """Rank by structural recursion: leaves count 1, a limit node counts one
    more than its child set."""
    best = 0
    for node in S.nodes:
        if isinstance(node, Leaf):
            best = max(best, 1)
        else:
            best = max(best, 1 + structural_rank(node.child))
    return best


def derivative_chain(S: SymbolicSet) -> List[int]:
    """Node counts of the successive derivatives, down to the empty set."""
    out = []
    cur = S
    while not cur.is_empty:
        out.append(len(cur.nodes))
        cur = cb_derivative(cur)
    out.append(0)
    return out


def nested_limit(apex: CirclePoint, k: int, ratio: Fraction = Fraction(1, 4),
                 direction: str = RIGHT) -> SymbolicSet:
    """Convenience builder: a k-fold nested limit tree of rank k + 1."""
    if k < 0:
        raise ValueError("k must be non-negative")
    S = SymbolicSet((Leaf(apex),))
    for _ in range(k):
        S = SymbolicSet((Limit(apex, S, direction, ratio),))
    return S
