"""Range-dispatched approximation algorithms with proven guarantees.

Every connected component is routed by the covering radius: forests and
unit fractions solve exactly, large radii fall back to greedy set cover,
and each remaining interval gets the algorithm whose factor is proven for
it.  Each report carries the factor actually claimed for the instance.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

from .graphs import (
    Cover,
    Graph,
    ONE,
    Point,
    ZERO,
    connected_components,
    induced_subgraph,
    is_forest,
    relabel_points,
)
from .matching import (
    gallai_edmonds,
    one_cover_min,
    tree_cover,
    unit_fraction_cover,
    vc_2approx,
)
from .solver import (
    Budget,
    DEFAULT_BUDGET,
    InternalConsistencyError,
    build_set_cover,
    harmonic_number,
    min_cover_exact,
    solve_greedy,
)
from .verify import is_delta_cover, require_cover

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class RatioReport:
    """An approximate cover plus the guarantee claimed for it."""

    cover: Cover
    claimed_factor: Fraction
    regime: str
    avg_degree: Fraction
    param: int | None = None
    epsilon: Fraction | None = None


@dataclass(frozen=True)
class LevelPartition:
    """Leaf-distance layers: L0 = leaves, Li = vertices at distance i from one."""

    L0: frozenset[int]
    L1: frozenset[int]
    L2: frozenset[int]
    E01: tuple[tuple[int, int], ...]
    E11: tuple[tuple[int, int], ...]
    E12: tuple[tuple[int, int], ...]
    W: frozenset[int]


def level_partition(g: Graph) -> LevelPartition:
    L0 = frozenset(v for v in range(g.n) if g.degree(v) == 1)
    L1 = frozenset(
        v for v in range(g.n) if any(g.dist[v][u] == 1 for u in L0)
    )
    L2 = frozenset(
        v for v in range(g.n) if any(g.dist[v][u] == 2 for u in L0)
    )
    E01 = tuple(
        (a, b)
        for u, v in g.edges
        for a, b in ((u, v), (v, u))
        if a in L0 and b in L1
    )
    E11 = tuple((u, v) for u, v in g.edges if u in L1 and v in L1)
    E12 = tuple(
        (a, b)
        for u, v in g.edges
        for a, b in ((u, v), (v, u))
        if a in L1 and b in L2
    )
    W = frozenset(range(g.n)) - L0 - L1
    return LevelPartition(L0, L1, L2, E01, E11, E12, W)


def vertex_set_interval(delta: Fraction) -> int:
    """The integer x >= 2 with (x+1)/(2x+1) <= delta < x/(2x-1)."""
    if not HALF < delta < Fraction(2, 3):
        raise ValueError(f"delta {delta} outside (1/2, 2/3)")
    x = math.ceil((1 - delta) / (2 * delta - 1))
    assert Fraction(x + 1, 2 * x + 1) <= delta < Fraction(x, 2 * x - 1)
    return x


def _one_cover_factor(delta: Fraction) -> tuple[Fraction, str]:
    if delta < Fraction(7, 6):
        return Fraction(3, 2), "one_cover_3_2"
    if delta < Fraction(5, 4):
        return Fraction(5, 3), "one_cover_5_3"
    return Fraction(2), "one_cover_2"


def cover_via_one_cover(g: Graph, delta: Fraction, budget: Budget = DEFAULT_BUDGET) -> RatioReport:
    """For radii just above 1, an optimal 1-cover is a bounded-factor answer."""
    if not ONE < delta < Fraction(3, 2):
        raise ValueError(f"delta {delta} outside (1, 3/2)")
    result = one_cover_min(g, budget)
    factor, regime = _one_cover_factor(delta)
    cover = Cover(result.cover.points, delta)
    require_cover(g, cover, delta, regime)
    return RatioReport(cover, factor, regime, g.average_degree())


def cover_vertex_set(g: Graph, delta: Fraction, budget: Budget = DEFAULT_BUDGET) -> RatioReport:
    """Output V per non-tree component: an (x+1)/x approximation.

    Components with fewer than x edges are solved exactly instead (brute
    force is constant work there), trees go to the exact tree solver.
    """
    x = vertex_set_interval(delta)
    points: set[Point] = set()
    for comp in connected_components(g):
        sub, old = induced_subgraph(g, comp)
        if is_forest(sub):
            part = tree_cover(sub, delta).cover.points
        elif sub.m < x:
            part = min_cover_exact(sub, delta, budget).cover.points
        else:
            part = {Point.vertex(v) for v in range(sub.n)}
        points |= relabel_points(part, old)
    cover = Cover(frozenset(points), delta)
    require_cover(g, cover, delta, "vertex_set_x")
    return RatioReport(cover, Fraction(x + 1, x), "vertex_set_x", g.average_degree(), param=x)


def cover_leaf_level(g: Graph, delta: Fraction) -> RatioReport:
    """Leaf-edge points at 2/3, a vertex cover among leaf-neighbors, the rest.

    The output is a 2/3-cover of any graph whose components are not trees,
    hence a delta-cover throughout [2/3, 3/4).
    """
    if not Fraction(2, 3) <= delta < Fraction(3, 4):
        raise ValueError(f"delta {delta} outside [2/3, 3/4)")
    if is_forest(g):
        raise ValueError("leaf-level algorithm expects non-tree input")
    levels = level_partition(g)
    points: set[Point] = set()
    for u0, u1 in levels.E01:
        points.add(Point.on_edge(u0, u1, Fraction(2, 3)))
    sub_edges = [(u, v) for u, v in levels.E11]
    inner = Graph(sub_edges, n=g.n)
    points |= {Point.vertex(v) for v in vc_2approx(inner)}
    points |= {Point.vertex(v) for v in levels.W}
    cover = Cover(frozenset(points), delta)
    require_cover(g, cover, Fraction(2, 3), "leaf_level")
    return RatioReport(Cover(cover.points, delta), Fraction(3, 2), "leaf_level",
                       g.average_degree())


def small_delta_interval(delta: Fraction) -> tuple[str, int]:
    """Classify delta < 1/2 (not a unit fraction) into its approximation case.

    Returns ("even", k) for delta in (1/(2k+2), 1/(2k+1)) and ("odd", k)
    for delta in (1/(2k+1), 1/(2k)).
    """
    if not ZERO < delta < HALF:
        raise ValueError(f"delta {delta} outside (0, 1/2)")
    if delta.numerator == 1:
        raise ValueError(f"delta {delta} is a unit fraction; solve exactly")
    m = (1 / delta).__floor__()
    if m % 2 == 0:
        return "odd", m // 2
    return "even", (m - 1) // 2


def cover_small_delta_even(g: Graph, k: int, delta: Fraction) -> RatioReport:
    """All vertices plus k evenly spread interior points per edge.

    Valid whenever delta > 1/(2k+2); the guarantee 1 + 1/(k*avg_degree + 1)
    holds against non-tree components, which is all the dispatcher sends.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    points: set[Point] = set()
    factor = Fraction(1)
    for comp in connected_components(g):
        sub, old = induced_subgraph(g, comp)
        part = {Point.vertex(v) for v in range(sub.n)}
        for u, v in sub.edges:
            for j in range(1, k + 1):
                part.add(Point.on_edge(u, v, HALF + (2 * j - k - 1) * delta))
        points |= relabel_points(part, old)
        if sub.m:
            factor = max(factor, 1 + Fraction(1, k * sub.average_degree() + 1))
    cover = Cover(frozenset(points), delta)
    require_cover(g, cover, delta, "small_even")
    return RatioReport(cover, factor, "small_even", g.average_degree(), param=k)


def cover_small_delta_odd(g: Graph, k: int, delta: Fraction,
                          budget: Budget = DEFAULT_BUDGET) -> RatioReport:
    """A minimum 1/(2k+1)-cover, reused for every delta above 1/(2k+1).

    Its size is exactly k|E| plus the minimum 1-cover, and any delta-cover
    for delta < 1/(2k) needs at least k|E| points, which yields the factor
    min(1 + 4/(3k*avg_degree), 1 + 1/(2k) + eps).
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    result = unit_fraction_cover(g, 2 * k + 1, budget)
    if result.optimal:
        bound = k * g.m + one_cover_min(g, budget).size
        if result.size > bound:
            raise InternalConsistencyError(
                f"1/{2 * k + 1}-cover of size {result.size} exceeds k|E| + cov1 = {bound}"
            )
    ge = gallai_edmonds(g)
    eps = Fraction(g.n + ge.c_ge3, g.n + ge.c_ge3 - 1) - 1 if g.n + ge.c_ge3 > 1 else Fraction(1)
    avg = g.average_degree()
    factor = 1 + Fraction(1, 2 * k) + eps
    if avg > 0:
        factor = min(factor, 1 + Fraction(4, 3 * k) / avg)
    cover = Cover(result.cover.points, delta)
    require_cover(g, cover, delta, "small_odd")
    return RatioReport(cover, factor, "small_odd", avg, param=k, epsilon=eps)


def translate_cover_up(g: Graph, s_prime: Cover, delta: Fraction) -> Cover:
    """Shrink a delta/(2*delta+1)-cover into a delta-cover, edge by edge.

    Every edge carrying k >= 2 points contributes k - 1 points spaced
    2*delta apart, starting at (2*delta + 1) times the smallest offset; an
    edge with at most one point contributes nothing.
    """
    delta_prime = delta / (2 * delta + 1)
    require_cover(g, s_prime, delta_prime, "translation input")
    out: set[Point] = set()
    for u, v in g.edges:
        offsets = sorted(
            p.t if not p.is_vertex and p.edge() == (u, v)
            else (ZERO if p == Point.vertex(u) else ONE)
            for p in s_prime.points
            if (not p.is_vertex and p.edge() == (u, v))
            or p == Point.vertex(u)
            or p == Point.vertex(v)
        )
        k = len(offsets)
        if k <= 1:
            continue
        mu = offsets[0]
        lam = mu * (2 * delta + 1)
        for _ in range(k - 1):
            out.add(Point.on_edge(u, v, min(lam, ONE)))
            lam += 2 * delta
    cover = Cover(frozenset(out), delta)
    report = is_delta_cover(g, cover, delta)
    if not report.is_cover:
        raise InternalConsistencyError(
            f"translated cover misses {report.witness}"
        )
    return cover


def _component_report(sub: Graph, delta: Fraction, budget: Budget) -> RatioReport:
    if is_forest(sub):
        res = tree_cover(sub, delta)
        return RatioReport(res.cover, Fraction(1), "exact", sub.average_degree())
    if delta == HALF:
        points = frozenset(Point.vertex(v) for v in range(sub.n))
        return RatioReport(Cover(points, delta), Fraction(1), "exact", sub.average_degree())
    if delta.numerator == 1:
        res = unit_fraction_cover(sub, delta.denominator, budget)
        return RatioReport(res.cover, Fraction(1), "exact", sub.average_degree())
    if delta >= Fraction(3, 2):
        inst = build_set_cover(sub, delta)
        res = solve_greedy(inst)
        require_cover(sub, res.cover, delta, "greedy set cover")
        return RatioReport(res.cover, harmonic_number(len(inst.universe)),
                           "large_delta", sub.average_degree())
    if delta > ONE:
        return cover_via_one_cover(sub, delta, budget)
    if delta >= Fraction(3, 4):
        points = frozenset(Point.vertex(v) for v in range(sub.n))
        cover = Cover(points, delta)
        require_cover(sub, cover, delta, "vertex set")
        return RatioReport(cover, Fraction(2), "vertex_set_34_1", sub.average_degree())
    if delta >= Fraction(2, 3):
        return cover_leaf_level(sub, delta)
    if delta > HALF:
        return cover_vertex_set(sub, delta, budget)
    case, k = small_delta_interval(delta)
    if case == "even":
        return cover_small_delta_even(sub, k, delta)
    return cover_small_delta_odd(sub, k, delta, budget)


def approx_cover(g: Graph, delta: Fraction, budget: Budget = DEFAULT_BUDGET) -> RatioReport:
    """Route each connected component to its regime and union the covers."""
    if delta <= ZERO:
        raise ValueError(f"delta must be positive, got {delta}")
    points: set[Point] = set()
    claimed = Fraction(1)
    regime = "exact"
    param: int | None = None
    epsilon: Fraction | None = None
    for comp in connected_components(g):
        sub, old = induced_subgraph(g, comp)
        rep = _component_report(sub, delta, budget)
        points |= relabel_points(rep.cover.points, old)
        if rep.claimed_factor > claimed:
            claimed = rep.claimed_factor
        if rep.regime != "exact":
            regime = rep.regime
            param = rep.param
            epsilon = rep.epsilon if rep.epsilon is not None else epsilon
    cover = Cover(frozenset(points), delta)
    report = is_delta_cover(g, cover, delta)
    if not report.is_cover:
        raise InternalConsistencyError(f"approx cover misses {report.witness}")
    return RatioReport(cover, claimed, regime, g.average_degree(), param=param,
                       epsilon=epsilon)
