from __future__ import annotations

from fractions import Fraction

import networkx as nx
import pytest
from networkx.generators.atlas import graph_atlas_g

from deltacover import Budget, Graph, build_graph, min_cover_exact
from deltacover.solver import SolveResult


def k_n(n: int) -> Graph:
    return build_graph([(i, j) for i in range(n) for j in range(i + 1, n)], n=n)


def cycle(n: int) -> Graph:
    return build_graph([(i, (i + 1) % n) for i in range(n)], n=n)


def path(edges: int) -> Graph:
    return build_graph([(i, i + 1) for i in range(edges)], n=edges + 1)


def star(leaves: int) -> Graph:
    return build_graph([(0, i) for i in range(1, leaves + 1)], n=leaves + 1)


@pytest.fixture(scope="session")
def atlas_suite() -> list[tuple[str, Graph]]:
    """All 142 connected graphs on 2..6 vertices from the graph atlas."""
    out = []
    for i, g in enumerate(graph_atlas_g()):
        if 2 <= g.number_of_nodes() <= 6 and nx.is_connected(g):
            edges = sorted(tuple(sorted(e)) for e in g.edges())
            out.append((f"atlas{i}", build_graph(edges, n=g.number_of_nodes())))
    assert len(out) == 142
    return out


@pytest.fixture(scope="session")
def small_trees() -> list[tuple[str, Graph]]:
    """All non-isomorphic trees on 2..8 vertices."""
    out = []
    for n in range(2, 9):
        for i, t in enumerate(nx.nonisomorphic_trees(n)):
            edges = sorted(tuple(sorted(e)) for e in t.edges())
            out.append((f"tree{n}_{i}", build_graph(edges, n=n)))
    return out


class OracleCache:
    """Shared memo of exact solves, keyed by graph identity and delta."""

    def __init__(self, budget: Budget):
        self.budget = budget
        self._memo: dict[tuple[int, tuple, Fraction], SolveResult] = {}

    def solve(self, g: Graph, delta: Fraction) -> SolveResult:
        key = (g.n, g.edges, delta)
        if key not in self._memo:
            self._memo[key] = min_cover_exact(g, delta, self.budget)
        return self._memo[key]

    def opt(self, g: Graph, delta: Fraction) -> int | None:
        """Proven optimum, or None when the budget ran out."""
        result = self.solve(g, delta)
        return result.size if result.optimal else None


@pytest.fixture(scope="session")
def oracle() -> OracleCache:
    return OracleCache(Budget(max_seconds=3.0))
