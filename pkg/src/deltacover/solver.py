"""Discretization to finite set cover, exact branch-and-bound, and greedy.

For delta = a/b there is always an optimal cover whose points sit on the
1/(2b) grid, and such a cover covers the whole graph iff it covers the
1/(4b) grid.  That turns the continuous problem into finite set cover with
exact integer arithmetic: offsets scale by 4b, the radius becomes 4a.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .graphs import Cover, Graph, Point, point_distance
from .verify import discretized_universe, is_delta_cover


class InternalConsistencyError(RuntimeError):
    """A solver produced something its own verifier rejects: a bug."""


class InfeasibleInstanceError(ValueError):
    """A universe element has no candidate within range."""


@dataclass(frozen=True)
class Budget:
    max_nodes: int = 10_000_000
    max_seconds: float = 60.0


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class SetCoverInstance:
    """Finite set cover equivalent of a covering instance.

    ``coverage[i]`` lists (sorted) the universe indices within ``delta`` of
    candidate i.
    """

    delta: Fraction
    universe: tuple[Point, ...]
    candidates: tuple[Point, ...]
    coverage: tuple[tuple[int, ...], ...]

    def masks(self) -> list[int]:
        return [sum(1 << i for i in cov) for cov in self.coverage]


@dataclass(frozen=True)
class SolveResult:
    cover: Cover
    size: int
    optimal: bool
    nodes_explored: int
    elapsed: float


def candidate_points(g: Graph, delta: Fraction) -> list[Point]:
    """All half-grid points: offsets x/(2b) per edge, plus every vertex.

    Some optimal cover uses only these, so they are the full candidate set.
    """
    b = delta.denominator
    step = 2 * b
    points: set[Point] = set()
    for u, v in g.edges:
        for x in range(step + 1):
            points.add(Point.on_edge(u, v, Fraction(x, step)))
    for w in range(g.n):
        if g.degree(w) == 0:
            points.add(Point.vertex(w))
    return sorted(points)


def _scaled_anchors(p: Point, scale: int) -> tuple[tuple[int, int], ...]:
    if p.is_vertex:
        return ((p.u, 0),)
    t = p.t * scale
    return ((p.u, int(t)), (p.v, scale - int(t)))


def build_set_cover(g: Graph, delta: Fraction) -> SetCoverInstance:
    """Universe = 1/(4b) grid, candidates = 1/(2b) grid, exact coverage sets."""
    if delta <= 0:
        raise ValueError(f"delta must be positive, got {delta}")
    a, b = delta.numerator, delta.denominator
    scale = 4 * b
    radius = 4 * a
    universe = discretized_universe(g, b)
    candidates = candidate_points(g, delta)
    uindex = {p: i for i, p in enumerate(universe)}
    edge_rows = [
        [uindex[Point.on_edge(u, v, Fraction(t, scale))] for t in range(scale + 1)]
        for u, v in g.edges
    ]
    isolated = [w for w in range(g.n) if g.degree(w) == 0]
    coverage: list[tuple[int, ...]] = []
    for cand in candidates:
        anchors = _scaled_anchors(cand, scale)
        hit: set[int] = set()
        for eid, (u, v) in enumerate(g.edges):
            du = dv = None
            for x, dx in anchors:
                hu, hv = g.dist[x][u], g.dist[x][v]
                if hu is not None:
                    d = dx + scale * hu
                    du = d if du is None or d < du else du
                if hv is not None:
                    d = dx + scale * hv
                    dv = d if dv is None or d < dv else dv
            row = edge_rows[eid]
            spans: list[tuple[int, int]] = []
            if du is not None and du <= radius:
                spans.append((0, min(scale, radius - du)))
            if dv is not None and dv <= radius:
                spans.append((max(0, scale - (radius - dv)), scale))
            if not cand.is_vertex and cand.edge() == (u, v):
                tc = int(cand.t * scale)
                spans.append((max(0, tc - radius), min(scale, tc + radius)))
            for lo, hi in spans:
                hit.update(row[lo : hi + 1])
        for w in isolated:
            for x, dx in anchors:
                hops = g.dist[x][w]
                if hops is not None and dx + scale * hops <= radius:
                    hit.add(uindex[Point.vertex(w)])
        coverage.append(tuple(sorted(hit)))
    covered_any = set()
    for cov in coverage:
        covered_any.update(cov)
    if len(covered_any) != len(universe):
        raise InfeasibleInstanceError("universe element with no candidate in range")
    return SetCoverInstance(delta, tuple(universe), tuple(candidates), tuple(coverage))


def _greedy_indices(masks: list[int], full: int, start: int = 0) -> list[int]:
    covered = start
    chosen: list[int] = []
    while covered != full:
        best, best_gain = -1, 0
        for i, m in enumerate(masks):
            gain = (m & ~covered).bit_count()
            if gain > best_gain:
                best, best_gain = i, gain
        if best < 0:
            raise InfeasibleInstanceError("greedy stuck: uncoverable element")
        chosen.append(best)
        covered |= masks[best]
    return chosen


class _BudgetExhausted(Exception):
    pass


def solve_exact(inst: SetCoverInstance, budget: Budget = DEFAULT_BUDGET) -> SolveResult:
    """Minimum-cardinality candidate subset covering the universe.

    Branch and bound on the uncovered element with fewest remaining
    candidates, greedy incumbent, deterministic ties by candidate index.
    Exceeding the budget returns the incumbent with ``optimal=False``.
    """
    t0 = time.monotonic()
    nu_full = len(inst.universe)
    masks_full = inst.masks()
    nc = len(masks_full)

    elem_cands_full = [0] * nu_full
    for ci, m in enumerate(masks_full):
        mm = m
        while mm:
            low = mm & -mm
            elem_cands_full[low.bit_length() - 1] |= 1 << ci
            mm ^= low
    if any(c == 0 for c in elem_cands_full):
        raise InfeasibleInstanceError("universe element with no candidate")

    # Keep only a core of universe elements: an element whose candidate set
    # contains another element's is covered for free once the harder one is.
    kept: list[int] = []
    kept_cands: list[int] = []
    for e in sorted(range(nu_full), key=lambda e: (elem_cands_full[e].bit_count(), e)):
        ce = elem_cands_full[e]
        if not any(ck & ce == ck for ck in kept_cands):
            kept.append(e)
            kept_cands.append(ce)
    kept.sort()
    nu = len(kept)
    full = (1 << nu) - 1
    masks = []
    for m in masks_full:
        mm = 0
        for i, e in enumerate(kept):
            if (m >> e) & 1:
                mm |= 1 << i
        masks.append(mm)

    # Forced candidates (elements coverable one way only), then dominance.
    elem_cands = [0] * nu
    for ci, m in enumerate(masks):
        mm = m
        while mm:
            low = mm & -mm
            elem_cands[low.bit_length() - 1] |= 1 << ci
            mm ^= low
    forced: list[int] = []
    covered0 = 0
    while True:
        new = [
            ec.bit_length() - 1
            for e in range(nu)
            if not (covered0 >> e) & 1 and (ec := elem_cands[e]).bit_count() == 1
        ]
        new = sorted({c for c in new if c not in forced})
        if not new:
            break
        for c in new:
            forced.append(c)
            covered0 |= masks[c]
    forced.sort()

    alive = []
    for i in range(nc):
        mi = masks[i] & ~covered0
        if mi == 0 and i not in forced:
            continue
        dominated = False
        for j in range(nc):
            if j == i:
                continue
            mj = masks[j] & ~covered0
            if mi | mj == mj and (mi != mj or j < i):
                dominated = True
                break
        if not dominated or i in forced:
            alive.append(i)
    avail0 = 0
    for i in alive:
        if i not in forced:
            avail0 |= 1 << i
    cand_by_elem = [elem_cands[e] & avail0 for e in range(nu)]
    union_reach = [0] * nu
    for e in range(nu):
        mm = cand_by_elem[e]
        while mm:
            low = mm & -mm
            union_reach[e] |= masks[low.bit_length() - 1]
            mm ^= low
    max_deg = max((masks[i].bit_count() for i in alive), default=1)
    # Two walk orders for the independent-element bound: small-reach-first
    # builds large independent sets, index order works well on grid layouts.
    lb_orders = (
        tuple(range(nu)),
        tuple(sorted(range(nu), key=lambda e: (union_reach[e].bit_count(), e))),
    )

    def lower_bound(uncovered: int) -> int:
        best = (uncovered.bit_count() + max_deg - 1) // max_deg
        for order in lb_orders:
            indep = 0
            rem = uncovered
            for e in order:
                if (rem >> e) & 1:
                    indep += 1
                    rem &= ~union_reach[e]
                    if not rem:
                        break
            if indep > best:
                best = indep
        return best

    def drop_redundant(extra: list[int]) -> list[int]:
        kept = list(extra)
        for c in sorted(extra, reverse=True):
            others = covered0
            for d in kept:
                if d != c:
                    others |= masks[d]
            if others == full:
                kept.remove(c)
        return kept

    greedy = _greedy_indices(masks, full, start=covered0)
    best_chosen = sorted(forced + drop_redundant(greedy))
    best_size = len(best_chosen)
    nodes = 0
    deadline = t0 + budget.max_seconds
    root_elems = full & ~covered0

    def components_of(elems: int) -> list[int]:
        """Split elements into groups with disjoint candidate support."""
        comps = []
        rem = elems
        while rem:
            comp = 0
            frontier = rem & -rem
            while frontier:
                comp |= frontier
                reach = 0
                f = frontier
                while f:
                    fl = f & -f
                    reach |= union_reach[fl.bit_length() - 1]
                    f ^= fl
                frontier = reach & rem & ~comp
            comps.append(comp)
            rem &= ~comp
        return comps

    def solve_elems(elems: int, avail: int, ub: int, at_root: bool) -> list[int] | None:
        """Exact minimum cover of ``elems`` if smaller than ``ub``, else None."""
        nonlocal nodes, best_size, best_chosen
        nodes += 1
        if nodes > budget.max_nodes or (nodes & 0xFF == 0 and time.monotonic() > deadline):
            raise _BudgetExhausted
        if elems == 0:
            return []
        if ub <= 1:
            return None
        comps = components_of(elems)
        if len(comps) > 1:
            lbs = [lower_bound(c) for c in comps]
            chosen_all: list[int] = []
            for i, comp in enumerate(comps):
                rest = sum(lbs[i + 1:])
                sub = solve_elems(comp, avail, ub - len(chosen_all) - rest, False)
                if sub is None:
                    return None
                chosen_all += sub
            return chosen_all
        if lower_bound(elems) >= ub:
            return None
        pick_mask, pick_deg = 0, None
        rem = elems
        while rem:
            low = rem & -rem
            cm = cand_by_elem[low.bit_length() - 1] & avail
            deg = cm.bit_count()
            if deg == 0:
                return None
            if pick_deg is None or deg < pick_deg:
                pick_mask, pick_deg = cm, deg
                if deg == 1:
                    break
            rem ^= low
        branch: list[int] = []
        mm = pick_mask
        while mm:
            low = mm & -mm
            branch.append(low.bit_length() - 1)
            mm ^= low
        branch.sort(key=lambda c: (-(masks[c] & elems).bit_count(), c))
        best: list[int] | None = None
        sub_avail = avail
        for c in branch:
            sub_avail &= ~(1 << c)
            sub = solve_elems(elems & ~masks[c], sub_avail, ub - 1, False)
            if sub is not None:
                best = [c] + sub
                ub = len(best)
                if at_root and len(forced) + ub < best_size:
                    best_size = len(forced) + ub
                    best_chosen = sorted(forced + best)
        return best

    optimal = True
    try:
        improved = solve_elems(root_elems, avail0, best_size - len(forced), True)
        if improved is not None:
            trimmed = sorted(forced + drop_redundant(improved))
            if len(trimmed) < best_size:
                best_size = len(trimmed)
                best_chosen = trimmed
    except _BudgetExhausted:
        optimal = False
    elapsed = time.monotonic() - t0
    points = frozenset(inst.candidates[i] for i in best_chosen)
    return SolveResult(Cover(points, inst.delta), len(points), optimal, nodes, elapsed)


def solve_greedy(inst: SetCoverInstance) -> SolveResult:
    """Classic greedy: repeatedly take the candidate covering the most."""
    t0 = time.monotonic()
    full = (1 << len(inst.universe)) - 1
    chosen = _greedy_indices(inst.masks(), full)
    points = frozenset(inst.candidates[i] for i in chosen)
    return SolveResult(
        Cover(points, inst.delta), len(points), False, 0, time.monotonic() - t0
    )


def min_cover_exact(
    g: Graph, delta: Fraction, budget: Budget = DEFAULT_BUDGET
) -> SolveResult:
    """Build the finite instance, solve it, and verify the result."""
    inst = build_set_cover(g, delta)
    result = solve_exact(inst, budget)
    report = is_delta_cover(g, result.cover, delta)
    if not report.is_cover:
        raise InternalConsistencyError(
            f"solver output fails verification near {report.witness}"
        )
    return result


@lru_cache(maxsize=None)
def harmonic_number(n: int) -> Fraction:
    """H(n) as an exact rational; the greedy set-cover guarantee."""
    if n <= 0:
        return Fraction(0)
    return harmonic_number(n - 1) + Fraction(1, n)


def coverage_spot_check(g: Graph, inst: SetCoverInstance, samples: int = 50) -> bool:
    """Cross-check scaled-integer coverage against Fraction distances."""
    import random

    rng = random.Random(0xC0FFEE)
    pairs = [
        (rng.randrange(len(inst.candidates)), rng.randrange(len(inst.universe)))
        for _ in range(samples)
    ]
    for ci, ui in pairs:
        d = point_distance(g, inst.candidates[ci], inst.universe[ui])
        in_cov = ui in set(inst.coverage[ci])
        if (d is not None and d <= inst.delta) != in_cov:
            return False
    return True
