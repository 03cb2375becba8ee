"""Unit-edge graphs and the continuum of points living on their edges.

A graph here is simple and undirected, every edge has length 1.  Locations
are either vertices or interior positions on an edge; all coordinates are
exact rationals (``fractions.Fraction``), so distance computations and set
semantics never touch floating point.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]

ZERO = Fraction(0)
ONE = Fraction(1)


class GraphValidationError(ValueError):
    """Raised for loops, duplicate edges, or out-of-range vertex ids."""


class InvalidPointError(ValueError):
    """Raised when a point refers to an edge the graph does not have."""


@dataclass(frozen=True, order=True)
class Point:
    """A location on a graph: a vertex, or an interior position on an edge.

    Interior points store the offset ``t`` from the lesser endpoint ``u``
    with ``0 < t < 1``; the same location written from the other end,
    ``(v, u, 1 - t)``, normalizes to this form.  Vertex points use
    ``u == v`` and ``t == 0``, so equality and hashing are structural.
    """

    u: int
    v: int
    t: Fraction

    @staticmethod
    def vertex(u: int) -> "Point":
        return Point(u, u, ZERO)

    @staticmethod
    def on_edge(u: int, v: int, t: Fraction | int) -> "Point":
        """The point at distance ``t`` from ``u`` along edge ``{u, v}``."""
        t = Fraction(t)
        if not ZERO <= t <= ONE:
            raise InvalidPointError(f"offset {t} outside [0, 1] on edge ({u}, {v})")
        if t == ZERO:
            return Point(u, u, ZERO)
        if t == ONE:
            return Point(v, v, ZERO)
        if u == v:
            raise InvalidPointError(f"interior point on loop ({u}, {u})")
        if u > v:
            u, v, t = v, u, ONE - t
        return Point(u, v, t)

    @property
    def is_vertex(self) -> bool:
        return self.u == self.v

    def edge(self) -> Edge:
        if self.is_vertex:
            raise InvalidPointError(f"vertex point {self} lies on no single edge")
        return (self.u, self.v)

    def anchors(self) -> tuple[tuple[int, Fraction], ...]:
        """(vertex, distance-to-it) pairs through which paths must leave."""
        if self.is_vertex:
            return ((self.u, ZERO),)
        return ((self.u, self.t), (self.v, ONE - self.t))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        if self.is_vertex:
            return f"Point.vertex({self.u})"
        return f"Point.on_edge({self.u}, {self.v}, {self.t})"


class Graph:
    """Simple undirected graph with unit edges and precomputed hop distances.

    Immutable after construction; ``dist[u][v]`` is the BFS distance in
    edges (``None`` when ``u`` and ``v`` lie in different components).
    """

    __slots__ = ("n", "edges", "edge_set", "edge_index", "adj", "dist")

    def __init__(self, edges: Iterable[Edge], n: int | None = None):
        raw = list(edges)
        if n is None:
            n = 1 + max((max(u, v) for u, v in raw), default=-1)
        canon: list[Edge] = []
        seen: set[Edge] = set()
        for i, (u, v) in enumerate(raw):
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValidationError(f"edge {i}: vertex outside [0, {n}) in ({u}, {v})")
            if u == v:
                raise GraphValidationError(f"edge {i}: loop ({u}, {v})")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphValidationError(f"edge {i}: duplicate ({u}, {v})")
            seen.add(e)
            canon.append(e)
        canon.sort()
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(canon)
        self.edge_set = frozenset(canon)
        self.edge_index = {e: i for i, e in enumerate(canon)}
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in canon:
            adj[u].append(v)
            adj[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self.dist: tuple[tuple[int | None, ...], ...] = tuple(
            tuple(row) for row in (_bfs(self.adj, s) for s in range(n))
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_set

    def average_degree(self) -> Fraction:
        return Fraction(2 * self.m, self.n) if self.n else ZERO

    def check_point(self, p: Point) -> None:
        if p.is_vertex:
            if not 0 <= p.u < self.n:
                raise InvalidPointError(f"vertex {p.u} outside [0, {self.n})")
        elif (p.u, p.v) not in self.edge_set:
            raise InvalidPointError(f"edge ({p.u}, {p.v}) not in graph")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.m})"


def _bfs(adj: Sequence[Sequence[int]], source: int) -> list[int | None]:
    dist: list[int | None] = [None] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def build_graph(edges: Iterable[Edge], n: int | None = None) -> Graph:
    """Validate an edge list and build the canonical graph."""
    return Graph(edges, n)


@dataclass(frozen=True)
class Cover:
    """A finite set of points proposed as a delta-cover."""

    points: frozenset[Point]
    delta: Fraction

    @staticmethod
    def of(points: Iterable[Point], delta: Fraction | int) -> "Cover":
        return Cover(frozenset(points), Fraction(delta))

    def sorted_points(self) -> list[Point]:
        return sorted(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)


def point_distance(g: Graph, p: Point, q: Point) -> Fraction | None:
    """Shortest-path distance between two points; None if disconnected.

    The minimum runs over the four endpoint routes and, for two points on
    the same edge, the direct along-edge distance.
    """
    g.check_point(p)
    g.check_point(q)
    best: Fraction | None = None
    if not p.is_vertex and not q.is_vertex and p.edge() == q.edge():
        best = abs(p.t - q.t)
    for a, da in p.anchors():
        for b, db in q.anchors():
            hops = g.dist[a][b]
            if hops is None:
                continue
            d = da + hops + db
            if best is None or d < best:
                best = d
    return best


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, ordered by smallest member."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``vertices`` plus the new-id -> old-id table."""
    old = sorted(vertices)
    to_new = {u: i for i, u in enumerate(old)}
    edges = [(to_new[u], to_new[v]) for u, v in g.edges if u in to_new and v in to_new]
    return Graph(edges, n=len(old)), old


def relabel_points(points: Iterable[Point], old_ids: Sequence[int]) -> frozenset[Point]:
    """Map points of an induced subgraph back to the parent graph's ids.

    The id table is increasing, so canonical edge orientation is preserved.
    """
    out = set()
    for p in points:
        if p.is_vertex:
            out.add(Point.vertex(old_ids[p.u]))
        else:
            out.add(Point(old_ids[p.u], old_ids[p.v], p.t))
    return frozenset(out)


def is_forest(g: Graph) -> bool:
    comps = connected_components(g)
    within = [0] * len(comps)
    comp_of = {}
    for i, comp in enumerate(comps):
        for u in comp:
            comp_of[u] = i
    for u, v in g.edges:
        within[comp_of[u]] += 1
    return all(within[i] == len(comp) - 1 for i, comp in enumerate(comps))


@dataclass(frozen=True)
class SubdivisionMap:
    """Bookkeeping for an x-subdivision: where every new vertex/edge came from.

    ``paths[i]`` lists the vertices replacing edge i, oriented from the
    lesser original endpoint.  Positions on an original edge map bijectively
    onto positions along the replacing path, scaled by the factor.
    """

    factor: int
    base_n: int
    paths: tuple[tuple[int, ...], ...]
    vertex_origin: dict[int, tuple[int, int]]
    segment_origin: dict[Edge, tuple[int, int, bool]]

    def lift_point(self, g: Graph, p: Point) -> Point:
        """Position bijection from the base graph into the subdivision."""
        if p.is_vertex:
            return p
        path = self.paths[g.edge_index[p.edge()]]
        s = p.t * self.factor
        seg = int(s)
        frac = s - seg
        if frac == 0:
            return Point.vertex(path[seg])
        return Point.on_edge(path[seg], path[seg + 1], frac)

    def project_point(self, g: Graph, p: Point) -> Point:
        """Inverse bijection: a subdivision point back onto the base graph."""
        if p.is_vertex:
            if p.u < self.base_n:
                return p
            eid, offset = self.vertex_origin[p.u]
            u, v = g.edges[eid]
            return Point.on_edge(u, v, Fraction(offset, self.factor))
        eid, seg, flipped = self.segment_origin[p.edge()]
        t = ONE - p.t if flipped else p.t
        u, v = g.edges[eid]
        return Point.on_edge(u, v, (seg + t) / self.factor)


def subdivide(g: Graph, x: int) -> tuple[Graph, SubdivisionMap]:
    """Replace every edge by a path of ``x`` unit edges."""
    if x < 1:
        raise ValueError(f"subdivision factor must be >= 1, got {x}")
    next_id = g.n
    new_edges: list[Edge] = []
    paths: list[tuple[int, ...]] = []
    vertex_origin: dict[int, tuple[int, int]] = {}
    segment_origin: dict[Edge, tuple[int, int, bool]] = {}
    for eid, (u, v) in enumerate(g.edges):
        path = [u]
        for j in range(1, x):
            path.append(next_id)
            vertex_origin[next_id] = (eid, j)
            next_id += 1
        path.append(v)
        for seg in range(x):
            a, b = path[seg], path[seg + 1]
            key = (a, b) if a < b else (b, a)
            new_edges.append(key)
            segment_origin[key] = (eid, seg, a > b)
        paths.append(tuple(path))
    sub = Graph(new_edges, n=next_id)
    return sub, SubdivisionMap(x, g.n, tuple(paths), vertex_origin, segment_origin)


def lift_cover_to_subdivision(g: Graph, x: int, s: Cover) -> Cover:
    """Carry a cover of ``g`` onto the x-subdivision (radius scales by x)."""
    _, smap = subdivide(g, x)
    points = frozenset(smap.lift_point(g, p) for p in s.points)
    return Cover(points, s.delta * x)


def map_cover_from_subdivision(g: Graph, x: int, s_x: Cover) -> Cover:
    """Pull a cover of the x-subdivision back onto ``g`` (radius divides by x)."""
    _, smap = subdivide(g, x)
    points = frozenset(smap.project_point(g, p) for p in s_x.points)
    return Cover(points, s_x.delta / x)


def wreath_k2(g: Graph) -> Graph:
    """Double the graph: two copies, all cross pairs of each edge, plus rungs.

    Vertex ``(v, side)`` becomes id ``side * n + v``.
    """
    if g.n == 0:
        raise GraphValidationError("wreath product of an empty graph")
    n = g.n
    edges: list[Edge] = []
    for u, v in g.edges:
        for i in (0, 1):
            for j in (0, 1):
                edges.append((i * n + u, j * n + v))
    for v in range(n):
        edges.append((v, n + v))
    return Graph(edges, n=2 * n)
