"""Exact references computed by exhaustive search, for checking the fast path.

Everything here is deliberately independent of the construction code: the
searcher works on bitmasks, the cross-checker on raw arc lists, so agreement
with the main pipeline is meaningful evidence.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from collections.abc import Iterable

from .errors import BudgetExceededError
from .graph import (
    UNREACHABLE,
    Graph,
    ball,
    bfs_distances,
    bridges,
    girth,
    min_degree,
    shortest_path_between,
)
from .bounds import min_ball_size


@dataclass(frozen=True)
class OracleResult:
    """Outcome of the exhaustive search over all orientations."""

    value: int | None  # smallest achievable directed diameter, None if infeasible
    feasible: bool  # False when the graph has a bridge or is disconnected
    leaves: int  # complete orientations actually evaluated
    witness: tuple[tuple[int, int], ...] | None = None  # arcs achieving value


def _leaf_diameter(out_adj: list[int], n: int, cap: int | float) -> int | None:
    """Directed diameter from bitmask out-neighborhoods.

    Returns None as soon as the orientation is not strong or cannot beat cap.
    """
    full = (1 << n) - 1
    worst = 0
    for s in range(n):
        seen = 1 << s
        frontier = seen
        d = 0
        while seen != full:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= out_adj[b.bit_length() - 1]
                f ^= b
            nxt &= ~seen
            if not nxt:
                return None
            seen |= nxt
            frontier = nxt
            d += 1
            if d >= cap:
                return None
        worst = max(worst, d)
    return worst


def _search(
    g: Graph, fix_first: bool, count_all: bool
) -> tuple[int | float, int, tuple[tuple[int, int], ...] | None]:
    """Branch over edge directions; returns (best diameter, leaf count, witness).

    With count_all the leaf count is the number of strong orientations,
    pruning by best-so-far is disabled, and no witness is tracked.
    """
    edges = g.edges()
    m = len(edges)
    n = g.n
    deg = [g.degree(v) for v in range(n)]
    rem = list(deg)
    in_deg = [0] * n
    out_deg = [0] * n
    out_adj = [0] * n
    chosen: list[tuple[int, int]] = [(0, 0)] * m
    best: list[int | float] = [UNREACHABLE]
    witness: list[tuple[tuple[int, int], ...] | None] = [None]
    leaves = [0]

    def rec(i: int) -> None:
        if i == m:
            cap = UNREACHABLE if count_all else best[0]
            d = _leaf_diameter(out_adj, n, cap)
            if d is not None:
                leaves[0] += 1
                if not count_all and d < best[0]:
                    best[0] = d
                    witness[0] = tuple(chosen)
            return
        u, v = edges[i]
        choices = ((u, v),) if (i == 0 and fix_first) else ((u, v), (v, u))
        for t, h in choices:
            out_deg[t] += 1
            in_deg[h] += 1
            rem[u] -= 1
            rem[v] -= 1
            out_adj[t] |= 1 << h
            chosen[i] = (t, h)
            dead = (rem[u] == 0 and (in_deg[u] == 0 or out_deg[u] == 0)) or (
                rem[v] == 0 and (in_deg[v] == 0 or out_deg[v] == 0)
            )
            if not dead:
                rec(i + 1)
            out_deg[t] -= 1
            in_deg[h] -= 1
            rem[u] += 1
            rem[v] += 1
            out_adj[t] &= ~(1 << h)

    rec(0)
    return best[0], leaves[0], witness[0]


def exact_oriented_diameter(g: Graph, budget: int = 24) -> OracleResult:
    """Minimum directed diameter over all strong orientations, exhaustively.

    Symmetry: reversing every arc preserves strongness and diameter, so the
    first edge's direction is fixed and only half the space is visited.
    """
    if g.n == 0:
        raise ValueError("the empty graph has no orientations")
    if g.m > budget:
        raise BudgetExceededError(
            f"{g.m} edges exceeds the exhaustive budget of {budget}"
        )
    if g.n == 1:
        return OracleResult(0, True, 1, ())
    if max(bfs_distances(g, (0,))) == UNREACHABLE or bridges(g):
        return OracleResult(None, False, 0)
    best, leaves, witness = _search(g, fix_first=True, count_all=False)
    if best == UNREACHABLE:  # pragma: no cover - bridgeless always admits one
        return OracleResult(None, False, leaves)
    return OracleResult(int(best), True, leaves, witness)


def count_strong_orientations(g: Graph, budget: int = 24) -> int:
    """Number of strong orientations, by checking all 2^m assignments."""
    if g.m > budget:
        raise BudgetExceededError(
            f"{g.m} edges exceeds the exhaustive budget of {budget}"
        )
    if g.n <= 1:
        return 1 if g.n == 1 else 0
    if max(bfs_distances(g, (0,))) == UNREACHABLE or bridges(g):
        return 0
    _, count, _ = _search(g, fix_first=False, count_all=True)
    return count


def directed_diameter_of_arcs(n: int, arcs: Iterable[tuple[int, int]]) -> int | float:
    """Directed diameter straight from an arc list; an independent slow path."""
    out: list[list[int]] = [[] for _ in range(n)]
    for t, h in arcs:
        out[t].append(h)
    worst: int | float = 0
    for s in range(n):
        dist = {s: 0}
        queue: deque[int] = deque([s])
        while queue:
            u = queue.popleft()
            for w in out[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if len(dist) < n:
            return UNREACHABLE
        worst = max(worst, max(dist.values()))
    return worst


# ---------------------------------------------------------------------------
# sampled check of the ball-size floor


@dataclass(frozen=True)
class BallCheckReport:
    """Result of sampling (vertex, shortest path) pairs against the ball floor."""

    eligible: bool  # minimum degree above 3, so the floor applies
    checked: int
    failures: tuple[tuple[int, int, int], ...]  # (source, target, center)
    skipped: int
    floor: int
    radius: int

    @property
    def all_passed(self) -> bool:
        return not self.failures


def check_ball_bound(g: Graph, samples: int = 100, seed: int = 0) -> BallCheckReport:
    """Sample shortest paths P and off-path centers x; check the ball floor.

    Each check removes E(P) and verifies the ball of radius ceil(girth/2)-1
    around x still holds at least min_ball_size(delta, girth) vertices.
    Centers on the path are excluded, matching the floor's hypothesis.
    """
    delta = min_degree(g)
    gval = girth(g)
    if gval == UNREACHABLE:
        raise ValueError("graph has no cycle, so no girth")
    gval = int(gval)
    radius = (gval + 1) // 2 - 1
    if delta <= 3:
        return BallCheckReport(False, 0, (), 0, min_ball_size(delta, gval), radius)
    floor = min_ball_size(delta, gval)
    rng = random.Random(seed)
    checked = 0
    skipped = 0
    failures: list[tuple[int, int, int]] = []
    attempts = 0
    while checked < samples and attempts < 50 * samples:
        attempts += 1
        s = rng.randrange(g.n)
        t = rng.randrange(g.n)
        if s == t:
            skipped += 1
            continue
        path = shortest_path_between(g, (s,), (t,))
        on_path = set(path)
        off = [x for x in range(g.n) if x not in on_path]
        if not off:
            skipped += 1
            continue
        x = off[rng.randrange(len(off))]
        excluded = list(zip(path, path[1:]))
        if len(ball(g, x, radius, excluded=excluded)) < floor:
            failures.append((s, t, x))
        checked += 1
    return BallCheckReport(True, checked, tuple(failures), skipped, floor, radius)
