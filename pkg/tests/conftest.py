"""Shared strategies and reference implementations used across test modules."""

from __future__ import annotations

from itertools import combinations

from hypothesis import assume, strategies as st

from orientdiam.errors import InfeasibleSpecError
from orientdiam.graph import UNREACHABLE, Graph
from orientdiam.generators import random_bridgeless


@st.composite
def arbitrary_graphs(draw, max_n: int = 10):
    """Any simple graph, connected or not, including edgeless ones."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return Graph(n, edges)


@st.composite
def bridgeless_graphs(draw, max_n: int = 40):
    """Seeded random bridgeless graphs with assorted degree/girth targets."""
    n = draw(st.integers(min_value=5, max_value=max_n))
    delta = draw(st.integers(min_value=2, max_value=min(4, n - 2)))
    floor = draw(st.sampled_from([3, 4]))
    seed = draw(st.integers(min_value=0, max_value=10_000))
    try:
        return random_bridgeless(n, delta, floor, seed)
    except InfeasibleSpecError:
        assume(False)  # tight parameter combinations are rejected, not failures


def floyd_warshall(g: Graph) -> list[list[int | float]]:
    """Textbook all-pairs distances, independent of the BFS code under test."""
    n = g.n
    dist: list[list[int | float]] = [[UNREACHABLE] * n for _ in range(n)]
    for v in range(n):
        dist[v][v] = 0
    for u, v in g.edges():
        dist[u][v] = 1
        dist[v][u] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == UNREACHABLE:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist


def girth_by_edge_removal(g: Graph) -> int | float:
    """Shortest cycle via: for each edge, 1 + distance between its ends without it."""
    best: int | float = UNREACHABLE
    for u, v in g.edges():
        keep = [e for e in g.edges() if e != (u, v)]
        sub = Graph(g.n, keep)
        d = floyd_warshall(sub)[u][v]
        if d != UNREACHABLE:
            best = min(best, d + 1)
    return best


def bridges_by_removal(g: Graph) -> set[tuple[int, int]]:
    """An edge is a bridge iff removing it disconnects its endpoints."""
    out = set()
    for u, v in g.edges():
        keep = [e for e in g.edges() if e != (u, v)]
        if floyd_warshall(Graph(g.n, keep))[u][v] == UNREACHABLE:
            out.add((u, v))
    return out
