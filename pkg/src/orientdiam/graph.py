"""Immutable undirected simple graphs and the BFS/DFS queries built on them.

Vertices are dense integers ``0..n-1``. Neighbor lists are kept sorted and
every traversal visits candidates in ascending id order, so all derived
paths, distances and orderings are deterministic.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Mapping, Sequence

from .errors import GraphFormatError

UNREACHABLE = math.inf


def edge_key(u: int, v: int) -> tuple[int, int]:
    """Canonical form of an undirected edge."""
    return (u, v) if u < v else (v, u)


class Graph:
    """An undirected simple graph with a fixed vertex range."""

    __slots__ = ("n", "m", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            e = edge_key(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.m = len(seen)
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges in canonical, sorted order."""
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def adjacency(self) -> dict[int, tuple[int, ...]]:
        return {v: self._adj[v] for v in range(self.n)}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._adj == other._adj
        )

    def __hash__(self):
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Path:
    """A simple path given by its vertex sequence.

    Validated against a host graph: consecutive vertices must be adjacent
    and no vertex may repeat. A single vertex is a legal (empty) path.
    """

    __slots__ = ("vertices",)

    def __init__(self, host: Graph, vertices: Sequence[int]):
        vs = tuple(vertices)
        if not vs:
            raise ValueError("a path needs at least one vertex")
        if len(set(vs)) != len(vs):
            raise ValueError("path vertices must be distinct")
        for a, b in zip(vs, vs[1:]):
            if not host.has_edge(a, b):
                raise ValueError(f"({a}, {b}) is not an edge of the host")
        self.vertices = vs

    def __len__(self) -> int:
        return len(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    @property
    def length(self) -> int:
        """Number of edges."""
        return len(self.vertices) - 1

    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(edge_key(a, b) for a, b in zip(self.vertices, self.vertices[1:]))

    def __repr__(self) -> str:
        return f"Path({list(self.vertices)})"


# ---------------------------------------------------------------------------
# distances


def _normalize_excluded(excluded) -> frozenset[tuple[int, int]]:
    if not excluded:
        return frozenset()
    return frozenset(edge_key(u, v) for u, v in excluded)


def bfs_distances(
    g: Graph,
    sources: Iterable[int],
    excluded: Iterable[tuple[int, int]] = (),
    blocked: Iterable[int] = (),
) -> list[int | float]:
    """BFS distances from a source set; ``UNREACHABLE`` marks unreached vertices.

    ``excluded`` edges are treated as deleted; ``blocked`` vertices are never
    entered (sources may not be blocked). Multi-source: the distance is to the
    nearest source.
    """
    ex = _normalize_excluded(excluded)
    blk = set(blocked)
    dist: list[int | float] = [UNREACHABLE] * g.n
    queue: deque[int] = deque()
    for s in sorted(set(sources)):
        if not 0 <= s < g.n:
            raise ValueError(f"source {s} out of range")
        if s in blk:
            raise ValueError(f"source {s} is blocked")
        dist[s] = 0
        queue.append(s)
    if not queue:
        raise ValueError("need at least one source")
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in g.neighbors(u):
            if dist[w] != UNREACHABLE or w in blk:
                continue
            if ex and edge_key(u, w) in ex:
                continue
            dist[w] = du + 1
            queue.append(w)
    return dist


def shortest_path_between(
    g: Graph,
    sources: Iterable[int],
    targets: Iterable[int],
    excluded: Iterable[tuple[int, int]] = (),
    blocked: Iterable[int] = (),
) -> list[int] | None:
    """Deterministic shortest path from a source set to a target set.

    Tie-break: among shortest paths, the one starting at the smallest-id
    source whose vertex sequence is lexicographically smallest. Returns None
    when no path exists. ``blocked`` vertices are excluded as interior (and
    as source/target) vertices.
    """
    ex = _normalize_excluded(excluded)
    src = sorted(set(sources))
    tgt = set(targets)
    if not src or not tgt:
        raise ValueError("sources and targets must be non-empty")
    dist_t = bfs_distances(g, tgt, excluded=ex, blocked=blocked)
    start = None
    best = UNREACHABLE
    for s in src:
        if dist_t[s] < best:
            best = dist_t[s]
            start = s
    if start is None or best == UNREACHABLE:
        return None
    blk = set(blocked)
    path = [start]
    cur = start
    remaining = dist_t[start]
    while remaining > 0:
        for w in g.neighbors(cur):
            if w in blk or dist_t[w] != remaining - 1:
                continue
            if ex and edge_key(cur, w) in ex:
                continue
            path.append(w)
            cur = w
            remaining -= 1
            break
        else:  # pragma: no cover - BFS guarantees a predecessor exists
            raise AssertionError("path reconstruction lost the trail")
    return path


def diameter(g: Graph) -> int | float:
    """Largest pairwise distance; UNREACHABLE when disconnected, 0 for n=1."""
    if g.n == 0:
        raise ValueError("diameter of the empty graph is undefined")
    worst: int | float = 0
    for v in range(g.n):
        dist = bfs_distances(g, (v,))
        far = max(dist)
        if far == UNREACHABLE:
            return UNREACHABLE
        worst = max(worst, far)
    return worst


def eccentricity(g: Graph, v: int) -> int | float:
    return max(bfs_distances(g, (v,)))


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle; UNREACHABLE for forests.

    Per-root BFS: a non-tree edge seen from root r closes a cycle of length
    dist[u] + dist[w] + 1. The estimate never undershoots and is exact for
    roots on a shortest cycle, so the minimum over roots is the girth.
    """
    best: int | float = UNREACHABLE
    for root in range(g.n):
        dist: dict[int, int] = {root: 0}
        parent: dict[int, int] = {root: -1}
        queue: deque[int] = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best - 1:
                continue
            for w in g.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
        if best == 3:
            break
    return best


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("min degree of the empty graph is undefined")
    return min(g.degree(v) for v in range(g.n))


def ball(
    g: Graph,
    v: int,
    radius: int,
    excluded: Iterable[tuple[int, int]] = (),
) -> set[int]:
    """Vertices within the given distance of v after deleting ``excluded`` edges."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    ex = _normalize_excluded(excluded)
    dist = {v: 0}
    queue: deque[int] = deque([v])
    while queue:
        u = queue.popleft()
        if dist[u] == radius:
            continue
        for w in g.neighbors(u):
            if w in dist:
                continue
            if ex and edge_key(u, w) in ex:
                continue
            dist[w] = dist[u] + 1
            queue.append(w)
    return set(dist)


# ---------------------------------------------------------------------------
# connectivity and bridges (also usable on plain adjacency mappings, so the
# same code serves subgraphs)


def components_of(adj: Mapping[int, Sequence[int]]) -> list[set[int]]:
    seen: set[int] = set()
    out: list[set[int]] = []
    for root in sorted(adj):
        if root in seen:
            continue
        comp = {root}
        queue: deque[int] = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        out.append(comp)
    return out


def is_connected_adj(adj: Mapping[int, Sequence[int]]) -> bool:
    if not adj:
        return True
    return len(components_of(adj)) == 1


def bridges_of(adj: Mapping[int, Sequence[int]]) -> set[tuple[int, int]]:
    """All bridges of the graph given as an adjacency mapping.

    Iterative lowpoint DFS; safe for paths longer than the recursion limit.
    """
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out: set[tuple[int, int]] = set()
    counter = 0
    for root in sorted(adj):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack: list[tuple[int, int, Iterable[int]]] = [(root, -1, iter(adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w in disc:
                    low[u] = min(low[u], disc[w])
                    continue
                disc[w] = low[w] = counter
                counter += 1
                stack.append((w, u, iter(adj[w])))
                advanced = True
                break
            if not advanced:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[u])
                    if low[u] > disc[parent]:
                        out.add(edge_key(parent, u))
    return out


def bridges(g: Graph) -> set[tuple[int, int]]:
    return bridges_of(g.adjacency())


def is_bridgeless_connected(g: Graph) -> bool:
    """True when g is connected and has no bridge (n=1 counts as such)."""
    if g.n == 0:
        return False
    if max(bfs_distances(g, (0,))) == UNREACHABLE:
        return False
    return not bridges(g)


# ---------------------------------------------------------------------------
# text format: '#' comments, an "n m" header, then one "u v" line per edge


def parse_graph(text: str) -> Graph:
    lines = []
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append(stripped)
    if not lines:
        raise GraphFormatError("no content lines found")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphFormatError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise GraphFormatError(f"header must be two integers, got {lines[0]!r}") from exc
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(body)}")
    edges: list[tuple[int, int]] = []
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"edge line must be 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"edge line must be two integers, got {line!r}") from exc
        edges.append((u, v))
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def format_graph(g: Graph, comment: str | None = None) -> str:
    out = []
    if comment:
        for line in comment.splitlines():
            out.append(f"# {line}")
    out.append(f"{g.n} {g.m}")
    for u, v in g.edges():
        out.append(f"{u} {v}")
    return "\n".join(out) + "\n"
