"""Exact decision procedure for "is S a delta-cover?".

Coverage is decided per edge: every cover point contributes closed
intervals of the edge's [0, 1] coordinate that it reaches, and the edge is
covered exactly when the merged union is [0, 1].  Closed-ball semantics
throughout, so touching intervals merge and exactly-tight packings verify.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .graphs import Cover, Edge, Graph, ONE, Point, ZERO

Interval = tuple[Fraction, Fraction]


class InvalidCoverError(ValueError):
    """Raised when an operation requires a delta-cover and got none."""

    def __init__(self, message: str, witness: Point | None = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class IntervalSet:
    """Sorted, disjoint closed intervals within [0, 1] of one edge."""

    edge: Edge
    intervals: tuple[Interval, ...]

    def covers_fully(self) -> bool:
        return self.intervals == ((ZERO, ONE),)

    def gaps(self) -> list[Interval]:
        """Maximal uncovered stretches, as (lo, hi) pairs."""
        out: list[Interval] = []
        prev = ZERO
        first = True
        for lo, hi in self.intervals:
            if first and lo > ZERO:
                out.append((ZERO, lo))
            elif not first and lo > prev:
                out.append((prev, lo))
            prev = hi
            first = False
        if first:
            out.append((ZERO, ONE))
        elif prev < ONE:
            out.append((prev, ONE))
        return out


@dataclass(frozen=True)
class VerifyReport:
    is_cover: bool
    witness: Point | None
    per_edge_gaps: tuple[tuple[Edge, Interval], ...]


def _merge(intervals: Iterable[Interval]) -> tuple[Interval, ...]:
    items = sorted((lo, hi) for lo, hi in intervals if lo <= hi)
    merged: list[Interval] = []
    for lo, hi in items:
        if merged and lo <= merged[-1][1]:
            if hi > merged[-1][1]:
                merged[-1] = (merged[-1][0], hi)
        else:
            merged.append((lo, hi))
    return tuple(merged)


def _clip(lo: Fraction, hi: Fraction) -> Interval | None:
    lo = max(lo, ZERO)
    hi = min(hi, ONE)
    return (lo, hi) if lo <= hi else None


def _vertex_reach(g: Graph, q: Point, w: int) -> Fraction | None:
    """Distance from cover point q to vertex w (None if unreachable)."""
    best: Fraction | None = None
    for a, da in q.anchors():
        hops = g.dist[a][w]
        if hops is None:
            continue
        d = da + hops
        if best is None or d < best:
            best = d
    return best


def edge_coverage_intervals(g: Graph, e: Edge, s: Cover, delta: Fraction) -> IntervalSet:
    """The subset of edge ``e`` within ``delta`` of some point of ``s``."""
    if delta <= ZERO:
        raise ValueError(f"delta must be positive, got {delta}")
    u, v = e if e[0] < e[1] else (e[1], e[0])
    if (u, v) not in g.edge_set:
        raise InvalidCoverError(f"edge ({u}, {v}) not in graph")
    pieces: list[Interval] = []
    for q in s.points:
        g.check_point(q)
        du = _vertex_reach(g, q, u)
        if du is not None and du <= delta:
            piece = _clip(ZERO, delta - du)
            if piece:
                pieces.append(piece)
        dv = _vertex_reach(g, q, v)
        if dv is not None and dv <= delta:
            piece = _clip(ONE - (delta - dv), ONE)
            if piece:
                pieces.append(piece)
        if not q.is_vertex and q.edge() == (u, v):
            piece = _clip(q.t - delta, q.t + delta)
            if piece:
                pieces.append(piece)
    return IntervalSet((u, v), _merge(pieces))


def is_delta_cover(g: Graph, s: Cover, delta: Fraction | None = None) -> VerifyReport:
    """Decide exactly whether ``s`` covers every point of the graph.

    The witness, when coverage fails, is the midpoint of the first maximal
    uncovered gap in canonical edge order (deterministic output).
    """
    if delta is None:
        delta = s.delta
    witness: Point | None = None
    gap_records: list[tuple[Edge, Interval]] = []
    for e in g.edges:
        iset = edge_coverage_intervals(g, e, s, delta)
        if iset.covers_fully():
            continue
        for gap in iset.gaps():
            gap_records.append((e, gap))
            if witness is None:
                mid = (gap[0] + gap[1]) / 2
                witness = Point.on_edge(e[0], e[1], mid)
    for w in range(g.n):
        if g.degree(w) > 0:
            continue
        covered = any(
            (d := _vertex_reach(g, q, w)) is not None and d <= delta for q in s.points
        )
        if not covered:
            gap_records.append(((w, w), (ZERO, ZERO)))
            if witness is None:
                witness = Point.vertex(w)
    return VerifyReport(witness is None, witness, tuple(gap_records))


def require_cover(g: Graph, s: Cover, delta: Fraction, what: str) -> None:
    report = is_delta_cover(g, s, delta)
    if not report.is_cover:
        raise InvalidCoverError(
            f"{what}: not a {delta}-cover, uncovered near {report.witness}",
            witness=report.witness,
        )


def discretized_universe(g: Graph, b: int) -> list[Point]:
    """The finite verification grid: every edge sampled at steps of 1/(4b).

    Any cover whose points sit on the half-grid (steps of 1/(2b)) covers the
    whole graph if and only if it covers these points, so they form the
    universe of the finite set-cover formulation.
    """
    if b < 1:
        raise ValueError(f"b must be >= 1, got {b}")
    step = 4 * b
    points: set[Point] = set()
    for u, v in g.edges:
        for x in range(step + 1):
            points.add(Point.on_edge(u, v, Fraction(x, step)))
    for w in range(g.n):
        if g.degree(w) == 0:
            points.add(Point.vertex(w))
    return sorted(points)


def normalize_neat(g: Graph, s: Cover, delta: Fraction | None = None) -> Cover:
    """Replace multi-point edges by their endpoints (valid for delta >= 1/2).

    Any edge carrying two or more cover points other than exactly its two
    endpoints gets those points swapped for the endpoints; the result is
    never larger and remains a cover.
    """
    if delta is None:
        delta = s.delta
    if delta < Fraction(1, 2):
        raise ValueError(f"neat normalization requires delta >= 1/2, got {delta}")
    report = is_delta_cover(g, s, delta)
    if not report.is_cover:
        raise InvalidCoverError(
            f"normalize_neat: input not a {delta}-cover, uncovered near {report.witness}",
            witness=report.witness,
        )
    points = set(s.points)
    changed = True
    while changed:
        changed = False
        for u, v in g.edges:
            on_edge = {p for p in points if not p.is_vertex and p.edge() == (u, v)}
            endpoints = {p for p in (Point.vertex(u), Point.vertex(v)) if p in points}
            if len(on_edge) + len(endpoints) >= 2 and on_edge:
                points -= on_edge
                points.add(Point.vertex(u))
                points.add(Point.vertex(v))
                changed = True
    out = Cover(frozenset(points), delta)
    require_cover(g, out, delta, "normalize_neat output")
    if len(out) > len(s):
        raise AssertionError("neat normalization must not grow the cover")
    return out
