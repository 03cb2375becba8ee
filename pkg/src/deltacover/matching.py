"""Matching machinery and the polynomial exact covering routes.

Maximum matching (blossom, via networkx), the Gallai-Edmonds vertex
partition, minimum 1-covers and unit-fraction covers, the exact bottom-up
tree solver, and the matching-based 2-approximate vertex cover.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from .graphs import (
    Cover,
    Edge,
    Graph,
    ONE,
    Point,
    ZERO,
    connected_components,
    induced_subgraph,
    is_forest,
    lift_cover_to_subdivision,
    map_cover_from_subdivision,
    relabel_points,
    subdivide,
)
from .solver import (
    Budget,
    DEFAULT_BUDGET,
    InternalConsistencyError,
    SolveResult,
    min_cover_exact,
)
from .verify import require_cover


class NotAForestError(ValueError):
    """Tree solver got a graph with a cycle; the caller must dispatch."""


@dataclass(frozen=True)
class Matching:
    edges: frozenset[Edge]

    @property
    def size(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class GEDecomposition:
    """Gallai-Edmonds split: D (exposable), A = N(D) - D, C = the rest.

    ``d_components`` are the components of the subgraph induced on D;
    components of size >= 3 are factor-critical and their count drives the
    1-cover size bounds.
    """

    D: frozenset[int]
    A: frozenset[int]
    C: frozenset[int]
    d_components: tuple[frozenset[int], ...]
    c_ge3: int


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def max_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching via the blossom algorithm."""
    raw = nx.max_weight_matching(_to_nx(g), maxcardinality=True)
    edges = frozenset((u, v) if u < v else (v, u) for u, v in raw)
    return Matching(edges)


def _nu(h: nx.Graph) -> int:
    return len(nx.max_weight_matching(h, maxcardinality=True))


def gallai_edmonds(g: Graph) -> GEDecomposition:
    """Compute (D, A, C) by the definition: D = vertices some maximum matching misses."""
    h = _to_nx(g)
    nu = _nu(h)
    D = set()
    for v in range(g.n):
        hv = h.copy()
        hv.remove_node(v)
        if _nu(hv) == nu:
            D.add(v)
    A = {w for v in D for w in g.adj[v]} - D
    C = set(range(g.n)) - D - A
    d_sub, d_old = induced_subgraph(g, sorted(D))
    comps = [frozenset(d_old[i] for i in comp) for comp in connected_components(d_sub)]
    comps.sort(key=min)
    for comp in comps:
        if len(comp) < 3:
            continue
        sub, _ = induced_subgraph(g, sorted(comp))
        hs = _to_nx(sub)
        for v in range(sub.n):
            hv = hs.copy()
            hv.remove_node(v)
            if _nu(hv) != (sub.n - 1) // 2:
                raise InternalConsistencyError(
                    f"D-component {sorted(comp)} is not factor-critical"
                )
    if C:
        c_sub, _ = induced_subgraph(g, sorted(C))
        if 2 * _nu(_to_nx(c_sub)) != len(C):
            raise InternalConsistencyError("C part lacks a perfect matching")
    return GEDecomposition(
        frozenset(D), frozenset(A), frozenset(C), tuple(comps), sum(len(c) >= 3 for c in comps)
    )


def one_cover_min(g: Graph, budget: Budget = DEFAULT_BUDGET) -> SolveResult:
    """Exact minimum 1-cover (vertices and edge midpoints suffice).

    An optimal 1-cover never exceeds 2/3 of the vertex count (and, with the
    Gallai-Edmonds census, (|V| + c_ge3) / 2); the cheap bound is asserted
    here, the matching-based one is exercised by the test suite.
    """
    result = min_cover_exact(g, Fraction(1), budget)
    if result.optimal and all(g.degree(v) > 0 for v in range(g.n)):
        if result.size > Fraction(2 * g.n, 3):
            raise InternalConsistencyError(
                f"1-cover of size {result.size} exceeds 2/3 of {g.n} vertices"
            )
    return result


def unit_fraction_cover(g: Graph, b: int, budget: Budget = DEFAULT_BUDGET) -> SolveResult:
    """Exact minimum (1/b)-cover via the subdivision route.

    Covers of g at radius 1/b correspond bijectively to covers of the
    b-subdivision at radius 1, where the problem is polynomial.
    """
    if b < 1:
        raise ValueError(f"b must be >= 1, got {b}")
    t0 = time.monotonic()
    sub, _ = subdivide(g, b)
    inner = one_cover_min(sub, budget)
    cover = map_cover_from_subdivision(g, b, inner.cover)
    delta = Fraction(1, b)
    require_cover(g, cover, delta, "unit-fraction cover")
    if len(cover) != inner.size:
        raise InternalConsistencyError("subdivision pull-back changed the cover size")
    return SolveResult(cover, inner.size, inner.optimal, inner.nodes_explored,
                       time.monotonic() - t0)


def vc_2approx(g: Graph) -> frozenset[int]:
    """Endpoints of a greedy maximal matching: a 2-approximate vertex cover."""
    used: set[int] = set()
    for u, v in g.edges:
        if u not in used and v not in used:
            used.add(u)
            used.add(v)
    return frozenset(used)


def _cover_tree_component(g: Graph, root: int, order: list[int], parent: list[int],
                          delta: Fraction) -> set[Point]:
    """Bottom-up greedy placement on one rooted tree component.

    State per processed vertex: ``need`` = distance to the farthest point
    below it still uncovered (None if everything is), ``reach`` = leftover
    covering radius extending upward from placed points (None if none
    reaches).  Climbing an edge, a point is placed the moment the need
    would hit exactly delta; deferred placements land on vertices.
    """
    placed: set[Point] = set()
    state: dict[int, tuple[Fraction | None, Fraction | None]] = {}
    children: dict[int, list[int]] = {v: [] for v in order}
    for v in order:
        if parent[v] != -1:
            children[parent[v]].append(v)

    def climb(child: int, top: int, need: Fraction | None, reach: Fraction | None):
        pos = ZERO
        while True:
            remaining = ONE - pos
            if need is not None:
                trigger = delta - need
            elif reach is not None and reach < remaining:
                trigger = reach + delta
            else:
                trigger = None
            if trigger is not None and trigger <= remaining:
                if pos + trigger == ONE:
                    return delta, None  # defer: need hits delta exactly at the vertex
                pos += trigger
                placed.add(Point.on_edge(child, top, pos))
                need, reach = None, delta
                continue
            if need is not None:
                need = need + remaining
            elif reach is not None and reach < remaining:
                need = remaining - reach
            reach = reach - remaining if reach is not None and reach >= remaining else None
            if need is None and reach is None:
                raise InternalConsistencyError("tree climb lost track of coverage")
            return need, reach

    for v in reversed(order):
        need: Fraction | None = None
        reach: Fraction | None = None
        for c in sorted(children[v]):
            cn, cr = climb(c, v, *state[c])
            if cn is not None and (need is None or cn > need):
                need = cn
            if cr is not None and (reach is None or cr > reach):
                reach = cr
        if reach is None and (need is None or need < ZERO):
            need = ZERO  # the vertex itself is uncovered
        if need is not None and reach is not None and need <= reach:
            need = None
        if need == delta:
            placed.add(Point.vertex(v))
            need, reach = None, delta
        state[v] = (need, reach)
    if state[root][0] is not None:
        placed.add(Point.vertex(root))
    return placed


def tree_cover(g: Graph, delta: Fraction) -> SolveResult:
    """Exact minimum delta-cover of a forest, one greedy pass per component."""
    if delta <= ZERO:
        raise ValueError(f"delta must be positive, got {delta}")
    if not is_forest(g):
        raise NotAForestError("input has a cycle; dispatch non-trees elsewhere")
    t0 = time.monotonic()
    points: set[Point] = set()
    for comp in connected_components(g):
        root = comp[0]
        if len(comp) == 1:
            points.add(Point.vertex(root))
            continue
        parent = [-1] * g.n
        order = [root]
        seen = {root}
        for u in order:
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    parent[w] = u
                    order.append(w)
        points |= _cover_tree_component(g, root, order, parent, delta)
    cover = Cover(frozenset(points), delta)
    require_cover(g, cover, delta, "tree cover")
    return SolveResult(cover, len(cover), True, 0, time.monotonic() - t0)
