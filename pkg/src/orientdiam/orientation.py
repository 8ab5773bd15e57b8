"""Edge orientations of an undirected base graph, partial or complete.

An orientation stores, per assigned edge, which endpoint is the head.
Distance queries follow assigned arcs only, so a partially oriented graph
behaves as the digraph of its assigned arcs.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping, Sequence

from .errors import (
    GraphFormatError,
    IncompleteOrientationError,
    OrientationConflictError,
    PreconditionError,
)
from .graph import UNREACHABLE, Graph, bfs_distances, bridges, edge_key


class Orientation:
    """A direction assignment over the edges of a fixed base graph."""

    __slots__ = ("base", "_heads", "_out", "_in")

    def __init__(self, base: Graph):
        self.base = base
        self._heads: dict[tuple[int, int], int] = {}
        self._out: tuple[tuple[int, ...], ...] | None = None
        self._in: tuple[tuple[int, ...], ...] | None = None

    def assign(self, tail: int, head: int) -> None:
        """Orient the edge tail-head as the arc tail->head.

        Re-assigning the same direction is a no-op; the opposite direction
        raises OrientationConflictError.
        """
        if not self.base.has_edge(tail, head):
            raise ValueError(f"({tail}, {head}) is not an edge of the base graph")
        e = edge_key(tail, head)
        old = self._heads.get(e)
        if old is None:
            self._heads[e] = head
            self._out = None
            self._in = None
        elif old != head:
            raise OrientationConflictError(
                f"edge {e} is already oriented toward {old}, not {head}", edge=e
            )

    def direction(self, u: int, v: int) -> int | None:
        """Head of the edge u-v, or None while unassigned."""
        if not self.base.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge of the base graph")
        return self._heads.get(edge_key(u, v))

    @property
    def assigned_count(self) -> int:
        return len(self._heads)

    def is_complete(self) -> bool:
        return len(self._heads) == self.base.m

    def arcs(self) -> list[tuple[int, int]]:
        """Assigned arcs as (tail, head) pairs, sorted by canonical edge."""
        out = []
        for u, v in sorted(self._heads):
            h = self._heads[(u, v)]
            out.append((v if h == u else u, h))
        return out

    def _ensure_adjacency(self) -> None:
        if self._out is not None:
            return
        fwd: list[list[int]] = [[] for _ in range(self.base.n)]
        bwd: list[list[int]] = [[] for _ in range(self.base.n)]
        for (u, v), h in self._heads.items():
            t = v if h == u else u
            fwd[t].append(h)
            bwd[h].append(t)
        self._out = tuple(tuple(sorted(x)) for x in fwd)
        self._in = tuple(tuple(sorted(x)) for x in bwd)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        self._ensure_adjacency()
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        self._ensure_adjacency()
        return self._in[v]

    def copy(self) -> "Orientation":
        dup = Orientation(self.base)
        dup._heads = dict(self._heads)
        return dup

    def __repr__(self) -> str:
        return f"Orientation({self.base!r}, assigned={len(self._heads)}/{self.base.m})"


# ---------------------------------------------------------------------------
# directed distances


def _directed_bfs(o: Orientation, seeds: Iterable[int], reverse: bool) -> list[int | float]:
    dist: list[int | float] = [UNREACHABLE] * o.base.n
    queue: deque[int] = deque()
    for s in sorted(set(seeds)):
        if not 0 <= s < o.base.n:
            raise ValueError(f"vertex {s} out of range")
        dist[s] = 0
        queue.append(s)
    if not queue:
        raise ValueError("need at least one seed vertex")
    step = o.in_neighbors if reverse else o.out_neighbors
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in step(u):
            if dist[w] == UNREACHABLE:
                dist[w] = du + 1
                queue.append(w)
    return dist


def directed_distances_from(o: Orientation, sources: Iterable[int]) -> list[int | float]:
    """Directed distance from the nearest source to every vertex."""
    return _directed_bfs(o, sources, reverse=False)


def directed_distances_to(o: Orientation, targets: Iterable[int]) -> list[int | float]:
    """Directed distance from every vertex to the nearest target."""
    return _directed_bfs(o, targets, reverse=True)


def is_strong(o: Orientation) -> bool:
    """True when every ordered vertex pair is joined by a directed path."""
    if not o.is_complete():
        raise IncompleteOrientationError("strongness is defined for complete orientations")
    n = o.base.n
    if n == 0:
        return False
    if n == 1:
        return True
    if max(directed_distances_from(o, (0,))) == UNREACHABLE:
        return False
    return max(directed_distances_to(o, (0,))) != UNREACHABLE


def directed_diameter(o: Orientation) -> int | float:
    """Largest directed distance over ordered pairs; UNREACHABLE if not strong."""
    if not o.is_complete():
        raise IncompleteOrientationError("diameter is defined for complete orientations")
    if o.base.n == 0:
        raise ValueError("diameter of the empty graph is undefined")
    worst: int | float = 0
    for v in range(o.base.n):
        far = max(directed_distances_from(o, (v,)))
        if far == UNREACHABLE:
            return UNREACHABLE
        worst = max(worst, far)
    return worst


# ---------------------------------------------------------------------------
# constructing orientations


def orient_adjacency(
    adj: Mapping[int, Sequence[int]], root: int
) -> list[tuple[int, int]]:
    """DFS-orient a connected (sub)graph: tree arcs point down, back arcs point up.

    Returns one (tail, head) arc per edge, sorted by canonical edge. On a
    bridgeless input the resulting digraph is strongly connected. Neighbors
    are scanned in ascending order, so the result is deterministic.
    """
    disc = {root: 0}
    counter = 1
    chosen: dict[tuple[int, int], tuple[int, int]] = {}
    stack: list[tuple[int, int, Iterable[int]]] = [(root, -1, iter(sorted(adj[root])))]
    while stack:
        u, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == parent:
                continue
            if w in disc:
                # every unassigned edge to a visited vertex runs to an ancestor
                e = edge_key(u, w)
                if e not in chosen:
                    chosen[e] = (u, w)
                continue
            disc[w] = counter
            counter += 1
            chosen[edge_key(u, w)] = (u, w)
            stack.append((w, u, iter(sorted(adj[w]))))
            advanced = True
            break
        if not advanced:
            stack.pop()
    return [chosen[e] for e in sorted(chosen)]


def strong_orientation(g: Graph) -> Orientation:
    """A strong orientation of a connected bridgeless graph, via one DFS."""
    if g.n == 0:
        raise PreconditionError("the empty graph cannot be oriented")
    if max(bfs_distances(g, (0,))) == UNREACHABLE:
        raise PreconditionError("graph is not connected")
    br = bridges(g)
    if br:
        witness = min(br)
        raise PreconditionError(
            f"graph has a bridge {witness}; no strong orientation exists",
            witness=witness,
        )
    o = Orientation(g)
    for tail, head in orient_adjacency(g.adjacency(), 0):
        o.assign(tail, head)
    return o


def orient_path(o: Orientation, vertices: Sequence[int], forward: bool = True) -> None:
    """Orient every edge along a vertex sequence, first-to-last or reversed."""
    vs = list(vertices)
    for a, b in zip(vs, vs[1:]):
        if forward:
            o.assign(a, b)
        else:
            o.assign(b, a)


# ---------------------------------------------------------------------------
# text format: "orientation n m" header, then one "tail head" line per edge


def parse_orientation(text: str, base: Graph) -> Orientation:
    """Parse an arc listing and check it orients each base edge exactly once."""
    lines = []
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append(stripped)
    if not lines:
        raise GraphFormatError("no content lines found")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "orientation":
        raise GraphFormatError(f"header must be 'orientation n m', got {lines[0]!r}")
    try:
        n, m = int(header[1]), int(header[2])
    except ValueError as exc:
        raise GraphFormatError(f"header must end in two integers, got {lines[0]!r}") from exc
    if n != base.n or m != base.m:
        raise GraphFormatError(
            f"header ({n}, {m}) does not match the base graph ({base.n}, {base.m})"
        )
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"expected {m} arc lines, found {len(body)}")
    o = Orientation(base)
    seen: set[tuple[int, int]] = set()
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"arc line must be 'tail head', got {line!r}")
        try:
            t, h = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"arc line must be two integers, got {line!r}") from exc
        if not (0 <= t < n and 0 <= h < n) or not base.has_edge(t, h):
            raise GraphFormatError(f"({t}, {h}) is not an edge of the base graph")
        e = edge_key(t, h)
        if e in seen:
            raise GraphFormatError(f"edge {e} oriented twice")
        seen.add(e)
        o.assign(t, h)
    return o


def format_orientation(o: Orientation, comment: str | None = None) -> str:
    if not o.is_complete():
        raise IncompleteOrientationError("refusing to serialize a partial orientation")
    out = []
    if comment:
        for line in comment.splitlines():
            out.append(f"# {line}")
    out.append(f"orientation {o.base.n} {o.base.m}")
    for t, h in o.arcs():
        out.append(f"{t} {h}")
    return "\n".join(out) + "\n"
