"""Breakpoint-orbit machinery: commensuration defects, orbit graphs, the
multiplicative coboundary problem over them, conjugator synthesis, and the
full conjugation pipeline turning a group of PL maps into rotations.

The constraint solved over an orbit graph is a_y = J(g, y) * a_{g(y)} for
every generator edge, where J is the derivative jump.  A product-one
solution is realized as the jump vector of a PL conjugator phi, and then
phi g phi^{-1} has no breakpoints, hence is a rotation.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .circle import CirclePoint, frac_mod1
from .cocycle import FiniteVector
from .homeo import PLHomeo, identity, _canonical
from .rotnum import fixed_points

JumpAssignment = FiniteVector


@dataclass(frozen=True)
class GroupPresentation:
    """A finite named generating set of PL circle homeomorphisms."""

    generators: Tuple[Tuple[str, PLHomeo], ...]

    def __post_init__(self):
        if not self.generators:
            raise ValueError("presentation needs at least one generator")
        names = [n for n, _ in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")

    @classmethod
    def from_dict(cls, d) -> "GroupPresentation":
        return cls(tuple(d.items()))


def commensuration_defect(g: PLHomeo) -> int:
    """|BP(g)| + |BP(g^{-1})|: the size of the symmetric difference of the
    trivial commensurated section and its translate."""
    return len(g.breakpoints) + len(g.inverse().breakpoints)


@dataclass(frozen=True)
class Edge:
    source: CirclePoint
    gen: str
    sign: int           # +1 for the generator, -1 for its inverse
    target: CirclePoint
    weight: Fraction    # jump of the (signed) generator at the source


@dataclass(frozen=True)
class OrbitGraph:
    vertices: Tuple[CirclePoint, ...]
    edges: Tuple[Edge, ...]
    closed: bool
    seed: Tuple[CirclePoint, ...]
    escaping: Tuple[CirclePoint, ...] = ()


def build_orbit_graph(G: GroupPresentation, max_vertices: int = 4096) -> OrbitGraph:
    """Breadth-first closure of the union of generator breakpoints under all
    generators and inverses, cut off at max_vertices."""
    seed = sorted({p for _, g in G.generators for p in g.breakpoints})
    if max_vertices < len(seed):
        raise ValueError("max_vertices smaller than the seed")
    maps = []
    for name, g in G.generators:
        maps.append((name, 1, g))
        maps.append((name, -1, g.inverse()))
    visited = set(seed)
    order = list(seed)
    queue = deque(seed)
    edges: List[Edge] = []
    escaping = set()
    closed = True
    while queue:
        v = queue.popleft()
        for name, sign, g in maps:
            w = g.eval(v)
            edges.append(Edge(v, name, sign, w, g.jump(v)))
            if w not in visited:
                if len(visited) >= max_vertices:
                    closed = False
                    escaping.add(w)
                else:
                    visited.add(w)
                    order.append(w)
                    queue.append(w)
    return OrbitGraph(tuple(order), tuple(edges), closed, tuple(seed),
                      tuple(sorted(escaping)))


@dataclass(frozen=True)
class Obstruction:
    """An exactly inconsistent cycle: its weight product differs from 1."""

    cycle: Tuple[Edge, ...]
    expected: Fraction
    found: Fraction


@dataclass(frozen=True)
class SynthesisInfeasible:
    """Consistent cocycle, but no rational component rescaling reaches a
    product-one assignment (a component-size-th root would be needed)."""

    total_product: Fraction
    component_sizes: Tuple[int, ...]


def _nth_root(q: Fraction, n: int) -> Optional[Fraction]:
    """Exact positive rational n-th root of q, or None."""
    def iroot(m: int) -> Optional[int]:
        if n == 1:
            return m
        r = 1 << -(-m.bit_length() // n)  # upper bound on the root
        while True:
            nr = ((n - 1) * r + m // r ** (n - 1)) // n
            if nr >= r:
                break
            r = nr
        return r if r ** n == m else None
    a = iroot(q.numerator)
    b = iroot(q.denominator)
    if a is None or b is None or a == 0:
        return None
    return Fraction(a, b)


def solve_coboundary(graph: OrbitGraph):
    """Solve a_y = J(g, y) * a_{g(y)} over a closed orbit graph.

    Returns a product-one JumpAssignment, an Obstruction carrying an
    inconsistent cycle, or SynthesisInfeasible if no rational rescaling
    can normalize the product.
    """
    if not graph.closed:
        raise ValueError("cannot solve a truncated orbit graph")
    if not graph.vertices:
        return FiniteVector.empty()
    a, parent, components = _propagate(graph)
    obstruction = _check_consistency(graph, a, parent)
    if obstruction is not None:
        return obstruction
    total = Fraction(1)
    for v in graph.vertices:
        total *= a[v]
    if total != 1:
        # scaling component c by t multiplies the total by t^{|c|}; the
        # reachable correction factors are exactly the g-th powers for
        # g = gcd of the component sizes (Bezout on the exponents)
        sizes = [len(c) for c in components]
        g = 0
        for n in sizes:
            g = math.gcd(g, n)
        t = _nth_root(1 / total, g)
        if t is None:
            return SynthesisInfeasible(total_product=total,
                                       component_sizes=tuple(sizes))
        for comp, c in zip(components, _gcd_coefficients(sizes)):
            if c:
                scale = t ** c
                for v in comp:
                    a[v] *= scale
    return FiniteVector.from_dict(a)


def _gcd_coefficients(sizes: List[int]) -> List[int]:
    """Integers c_i with sum(c_i * sizes[i]) == gcd(sizes)."""
    coeffs = [0] * len(sizes)
    g = 0
    for i, n in enumerate(sizes):
        if g == 0:
            g, coeffs[i] = n, 1
            continue
        gg, x, y = _ext_gcd(g, n)
        for j in range(i):
            coeffs[j] *= x
        coeffs[i] = y
        g = gg
    return coeffs


def _ext_gcd(a: int, b: int):
    if b == 0:
        return a, 1, 0
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def _propagate(graph: OrbitGraph):
    """Spanning-tree propagation of a_y = J * a_{g(y)} over the graph's
    vertex set; edges leaving the vertex set (truncated graphs) are skipped."""
    vset = set(graph.vertices)
    adj: Dict[CirclePoint, List[Tuple[Edge, bool]]] = {v: [] for v in graph.vertices}
    for e in graph.edges:
        if e.source in vset and e.target in vset:
            adj[e.source].append((e, True))    # forward: a_source = w * a_target
            adj[e.target].append((e, False))
    a: Dict[CirclePoint, Fraction] = {}
    parent: Dict[CirclePoint, Tuple[CirclePoint, Edge]] = {}
    components: List[List[CirclePoint]] = []
    for root in graph.vertices:
        if root in a:
            continue
        comp = [root]
        a[root] = Fraction(1)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for e, forward in adj[v]:
                other = e.target if forward else e.source
                val = a[v] / e.weight if forward else e.weight * a[v]
                if other not in a:
                    a[other] = val
                    parent[other] = (v, e)
                    comp.append(other)
                    queue.append(other)
        components.append(comp)
    return a, parent, components


def _check_consistency(graph: OrbitGraph, a, parent) -> Optional[Obstruction]:
    for e in graph.edges:
        if e.source not in a or e.target not in a:
            continue
        if a[e.source] != e.weight * a[e.target]:
            cycle = _cycle_through(e, parent)
            found = e.weight * a[e.target] / a[e.source]
            return Obstruction(cycle=cycle, expected=Fraction(1), found=found)
    return None


def _cycle_through(e: Edge, parent) -> Tuple[Edge, ...]:
    """The closing edge together with the spanning-tree paths to the root."""
    def path(v):
        out = []
        while v in parent:
            v, edge = parent[v]
            out.append(edge)
        return out
    p_src = path(e.source)
    p_tgt = path(e.target)
    # strip the shared tail up to the lowest common ancestor
    while p_src and p_tgt and p_src[-1] == p_tgt[-1]:
        p_src.pop()
        p_tgt.pop()
    return tuple([e] + p_tgt + list(reversed(p_src)))


def synthesize_conjugator(a: JumpAssignment) -> PLHomeo:
    """The canonical PL map whose jump vector is exactly a.

    Requires the product of values to be 1 (every PL circle homeomorphism
    has jump product 1).  The result fixes the smallest support point.
    """
    if not a.entries:
        return identity()
    if a.product() != 1:
        raise ValueError("assignment product differs from 1; no PL map realizes it")
    pts = [p.value for p, _ in a.entries]
    jumps = [v for _, v in a.entries]
    m = len(pts)
    # cumulative jump products: slope on the arc after pts[i] is sigma * u[i]
    u = []
    cur = Fraction(1)
    for j in jumps:
        cur *= j
        u.append(cur)
    lengths = [pts[i + 1] - pts[i] for i in range(m - 1)] + [pts[0] + 1 - pts[m - 1]]
    sigma = 1 / sum(ui * li for ui, li in zip(u, lengths))
    ys = [pts[0]]
    for i in range(m - 1):
        ys.append(ys[-1] + sigma * u[i] * lengths[i])
    pairs = [(x, frac_mod1(y)) for x, y in zip(pts, ys)]
    phi = PLHomeo(_canonical(pairs))
    return phi


def detect_finite_orbit(G: GroupPresentation, max_period: int,
                        max_orbit: int = 512, max_words: int = 2000
                        ) -> Optional[Tuple[CirclePoint, ...]]:
    """Exact search for a finite orbit of the group.

    Candidate points are fixed points of words of length at most max_period
    in the generators and their inverses; each candidate's orbit is closed
    under the generators up to max_orbit points.  Returns a finite orbit or
    None if nothing is found within the budget.
    """
    if max_period < 1:
        raise ValueError("max_period must be positive")
    maps = []
    for _, g in G.generators:
        maps.append(g)
        maps.append(g.inverse())
    seen = {identity()}
    frontier = [identity()]
    candidates: List[CirclePoint] = []
    identity_word_seen = False
    for _ in range(max_period):
        nxt = []
        for w in frontier:
            for g in maps:
                gw = g.compose(w)
                if gw.is_identity:
                    identity_word_seen = True
                if gw in seen:
                    continue
                seen.add(gw)
                nxt.append(gw)
                fs = fixed_points(gw)
                if fs.full:
                    identity_word_seen = True
                candidates.extend(fs.points)
                for s, t in fs.arcs:
                    candidates.extend((s, t))
            if len(seen) > max_words:
                break
        frontier = nxt
        if not frontier or len(seen) > max_words:
            break
    # a nontrivial word equal to the identity fixes everything; any point
    # is then a candidate for a finite group orbit
    if identity_word_seen:
        candidates.append(CirclePoint(Fraction(0)))
    tried = set()
    for p in candidates:
        if p in tried:
            continue
        tried.add(p)
        orbit = {p}
        queue = deque([p])
        bounded = True
        while queue and bounded:
            v = queue.popleft()
            for g in maps:
                w = g.eval(v)
                if w not in orbit:
                    if len(orbit) >= max_orbit:
                        bounded = False
                        break
                    orbit.add(w)
                    queue.append(w)
        if bounded:
            return tuple(sorted(orbit))
    return None


@dataclass(frozen=True)
class SmoothingOutcome:
    """Result of the conjugation pipeline."""

    kind: str  # "success" | "finite_orbit" | "obstruction" | "truncated" | "infeasible"
    phi: Optional[PLHomeo] = None
    conjugated: Tuple[Tuple[str, PLHomeo], ...] = ()
    orbit: Tuple[CirclePoint, ...] = ()
    cycle: Tuple[Edge, ...] = ()
    expected: Optional[Fraction] = None
    found: Optional[Fraction] = None
    escaping: Tuple[CirclePoint, ...] = ()
    component_sizes: Tuple[int, ...] = ()


def smooth_group(G: GroupPresentation, max_vertices: int = 4096) -> SmoothingOutcome:
    """Full pipeline: orbit graph, coboundary solve, conjugator synthesis.

    On success every conjugated generator has an empty breakpoint set, so it
    is structurally a rotation.  A finite orbit is not searched for here; a
    finite orbit and a solvable cocycle can coexist (use detect_finite_orbit
    separately).
    """
    graph = build_orbit_graph(G, max_vertices)
    if not graph.closed:
        # a truncated graph is never solved, but an inconsistent cycle inside
        # the explored part already certifies unsolvability (e.g. a jump at a
        # fixed breakpoint forces a bad self-loop)
        a, parent, _ = _propagate(graph)
        obstruction = _check_consistency(graph, a, parent)
        if obstruction is not None:
            return SmoothingOutcome(kind="obstruction", cycle=obstruction.cycle,
                                    expected=obstruction.expected,
                                    found=obstruction.found)
        return SmoothingOutcome(kind="truncated", escaping=graph.escaping)
    sol = solve_coboundary(graph)
    if isinstance(sol, Obstruction):
        return SmoothingOutcome(kind="obstruction", cycle=sol.cycle,
                                expected=sol.expected, found=sol.found)
    if isinstance(sol, SynthesisInfeasible):
        return SmoothingOutcome(kind="infeasible", found=sol.total_product,
                                component_sizes=sol.component_sizes)
    phi = synthesize_conjugator(sol)
    phi_inv = phi.inverse()
    conjugated = []
    for name, g in G.generators:
        c = phi.compose(g).compose(phi_inv)
        assert not c.breakpoints, (
            "conjugate retains breakpoints after a successful solve; "
            "this indicates a bug in the solver or synthesis")
        conjugated.append((name, c))
    return SmoothingOutcome(kind="success", phi=phi, conjugated=tuple(conjugated))
