"""Grows a small bridgeless core subgraph that every vertex can reach quickly.

One growth iteration picks a vertex at the reach limit, walks a shortest
path to it, patches the path into the core with detours until none of its
edges is a bridge, and banks every g-th detour vertex as a ball center.
The banked balls certify that the core stays small relative to the graph.

Every invariant the construction relies on is re-checked at runtime against
the actual sets; a violation raises CertifiedFailureError with the trace.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bounds import as_fraction, min_ball_size, path_scale, rational_str
from .errors import CertifiedFailureError, PreconditionError
from .graph import (
    Graph,
    ball,
    bfs_distances,
    bridges,
    bridges_of,
    edge_key,
    girth,
    is_bridgeless_connected,
    is_connected_adj,
    min_degree,
    shortest_path_between,
)


def subgraph_adjacency(
    vertices: set[int], edges: set[tuple[int, int]]
) -> dict[int, list[int]]:
    """Adjacency mapping of a vertex/edge subset, neighbor lists sorted."""
    adj: dict[int, list[int]] = {v: [] for v in sorted(vertices)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return {v: sorted(ws) for v, ws in adj.items()}


def induces_forest(g: Graph, vertices: set[int]) -> bool:
    """True when the induced subgraph on the given vertices has no cycle."""
    verts = set(vertices)
    edges = sum(1 for u in verts for w in g.neighbors(u) if w in verts and u < w)
    comps = 0
    seen: set[int] = set()
    for root in verts:
        if root in seen:
            continue
        comps += 1
        stack = [root]
        seen.add(root)
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w in verts and w not in seen:
                    seen.add(w)
                    stack.append(w)
    return edges == len(verts) - comps


@dataclass(frozen=True)
class IterationRecord:
    """Everything one growth iteration did, snapshotted for re-verification."""

    index: int
    path: tuple[int, ...]
    labeled: tuple[int, ...]
    centers: tuple[int, ...]
    fallback: bool
    cover_steps: int
    splices: int
    labeled_on_path: int
    h_vertices: tuple[int, ...]
    h_edges: tuple[tuple[int, int], ...]
    b: tuple[int, ...]
    f: tuple[int, ...]
    checks: dict

    def to_record(self) -> dict:
        return {
            "type": "growth_iteration",
            "index": self.index,
            "path": list(self.path),
            "labeled": list(self.labeled),
            "centers": list(self.centers),
            "fallback": self.fallback,
            "cover_steps": self.cover_steps,
            "splices": self.splices,
            "labeled_on_path": self.labeled_on_path,
            "h_vertices": list(self.h_vertices),
            "h_edges": [list(e) for e in self.h_edges],
            "b": list(self.b),
            "f": list(self.f),
            "checks": dict(self.checks),
        }


@dataclass
class GrowthTrace:
    header: dict
    iterations: list[IterationRecord]
    final: dict

    def to_records(self) -> list[dict]:
        out = [dict(self.header)]
        out.extend(rec.to_record() for rec in self.iterations)
        if self.final:
            out.append(dict(self.final))
        return out

    @property
    def all_passed(self) -> bool:
        if not self.final.get("property1", False):
            return False
        required = ("bridgeless_connected", "property2", "property3")
        return all(
            all(rec.checks.get(name, False) for name in required)
            for rec in self.iterations
        )


@dataclass(frozen=True)
class GrowthResult:
    """The grown core plus the evidence used to certify it."""

    core_vertices: frozenset[int]
    core_edges: frozenset[tuple[int, int]]
    centers: tuple[int, ...]
    claimed: frozenset[int]
    trace: GrowthTrace
    min_degree: int
    girth: int
    epsilon: Fraction
    ball_floor: int
    scale: int
    radius: int
    reach: int


# ---------------------------------------------------------------------------
# covering one escape path


def _covered_prefix(
    path: list[int], hp_v: set[int], hp_e: set[tuple[int, int]]
) -> int:
    """Number of leading path edges that are not bridges of core + path."""
    verts = hp_v | set(path)
    edges = hp_e | {edge_key(a, b) for a, b in zip(path, path[1:])}
    br = bridges_of(subgraph_adjacency(verts, edges))
    cp = 0
    for a, b in zip(path, path[1:]):
        if edge_key(a, b) in br:
            break
        cp += 1
    return cp


def _bump(counters: dict, budget: int, trace_bits: dict) -> None:
    counters["rounds"] += 1
    if counters["rounds"] > budget:
        raise CertifiedFailureError(
            "covering loop exceeded its round budget", details=trace_bits
        )


def _apply_splice(
    labeled: list[int],
    candidate: list[int],
    splice_path: list[int],
    hp_v: set[int],
    hp_e: set[tuple[int, int]],
    protected_v: set[int],
    protected_e: frozenset[tuple[int, int]],
    counters: dict,
) -> None:
    """Replace the label list, drop orphaned vertices, graft the splice path."""
    seen: set[int] = set()
    new_labeled: list[int] = []
    for x in candidate:
        if x not in seen:
            seen.add(x)
            new_labeled.append(x)
    if len(new_labeled) >= len(labeled):
        raise CertifiedFailureError(
            "splice did not shrink the label list",
            details={"labeled": list(labeled), "candidate": candidate},
        )
    dropped = {x for x in labeled if x not in seen}
    for x in dropped:
        if x not in protected_v:
            hp_v.discard(x)
    doomed = {
        e for e in hp_e if (e[0] in dropped or e[1] in dropped) and e not in protected_e
    }
    hp_e -= doomed
    for x in splice_path:
        hp_v.add(x)
    for a, b in zip(splice_path, splice_path[1:]):
        hp_e.add(edge_key(a, b))
    labeled[:] = new_labeled
    counters["splices"] += 1


def _stabilize(
    g: Graph,
    h_v: set[int],
    path_set: set[int],
    path_edges: frozenset[tuple[int, int]],
    h_e_protected: frozenset[tuple[int, int]],
    hp_v: set[int],
    hp_e: set[tuple[int, int]],
    labeled: list[int],
    counters: dict,
    budget: int,
) -> None:
    """Re-splice the label list until positions under-state no distance.

    Invariant on exit: for label position m (1-based), the vertex is at
    distance >= m from the pre-iteration core, and any two labels are at
    least their position difference apart (all distances avoid path edges).
    """
    protected_v = path_set | h_v
    protected_e = h_e_protected | path_edges
    while labeled:
        dist_h = bfs_distances(g, h_v, excluded=path_edges)
        viol = next(
            (
                (m, q, dist_h[q])
                for m, q in enumerate(labeled, start=1)
                if dist_h[q] < m
            ),
            None,
        )
        if viol is not None:
            m1, q1, s = viol
            if not isinstance(s, int) or s <= 0:
                raise CertifiedFailureError(
                    "labeled vertex sits inside the core",
                    details={"vertex": q1, "position": m1},
                )
            _bump(counters, budget, {"labeled": list(labeled)})
            blocked = (path_set - h_v) - {q1}
            sp = shortest_path_between(
                g, (q1,), h_v, excluded=path_edges, blocked=blocked
            )
            if sp is None or len(sp) - 1 != s:
                sp = shortest_path_between(g, (q1,), h_v, excluded=path_edges)
                counters["labeled_on_path"] += sum(
                    1 for x in sp[1:-1] if x in path_set
                )
            candidate = list(reversed(sp[1:-1])) + labeled[m1 - 1 :]
            _apply_splice(
                labeled, candidate, sp, hp_v, hp_e, protected_v, protected_e, counters
            )
            continue
        pair = None
        for m1 in range(1, len(labeled) + 1):
            d1 = bfs_distances(g, (labeled[m1 - 1],), excluded=path_edges)
            for m2 in range(m1 + 1, len(labeled) + 1):
                if d1[labeled[m2 - 1]] < m2 - m1:
                    pair = (m1, m2, d1[labeled[m2 - 1]])
                    break
            if pair:
                break
        if pair is None:
            return
        m1, m2, s = pair
        q1, q2 = labeled[m1 - 1], labeled[m2 - 1]
        _bump(counters, budget, {"labeled": list(labeled)})
        blocked = ((path_set | h_v) - {q1}) - {q2}
        sp = shortest_path_between(
            g, (q1,), (q2,), excluded=path_edges, blocked=blocked
        )
        if sp is None or len(sp) - 1 != s:
            sp = shortest_path_between(g, (q1,), (q2,), excluded=path_edges)
            counters["labeled_on_path"] += sum(1 for x in sp[1:-1] if x in path_set)
        candidate = labeled[:m1] + sp[1:-1] + labeled[m2 - 1 :]
        _apply_splice(
            labeled, candidate, sp, hp_v, hp_e, protected_v, protected_e, counters
        )


def cover_path(
    g: Graph,
    h_v: set[int],
    h_e: set[tuple[int, int]],
    path: list[int],
    budget: int,
) -> tuple[set[int], set[tuple[int, int]], list[int], dict]:
    """Patch detours onto core + path until no path edge is a bridge.

    Returns the enlarged vertex/edge sets, the detour vertices in label
    order, and the step counters. The covered prefix of the path migrates
    into the working subgraph as soon as it is safe, so detour searches
    always start from everything already secured.
    """
    path_edges = frozenset(edge_key(a, b) for a, b in zip(path, path[1:]))
    path_set = set(path)
    h_e_protected = frozenset(h_e)
    hp_v = set(h_v)
    hp_e = set(h_e)
    labeled: list[int] = []
    counters = {"rounds": 0, "cover_steps": 0, "splices": 0, "labeled_on_path": 0}
    target_edges = len(path) - 1
    while True:
        cp = _covered_prefix(path, hp_v, hp_e)
        for t in range(cp):
            hp_v.add(path[t])
            hp_v.add(path[t + 1])
            hp_e.add(edge_key(path[t], path[t + 1]))
        if cp == target_edges:
            break
        _bump(counters, budget, {"path": path, "covered": cp})
        suffix = path[cp + 1 :]
        r_path = shortest_path_between(g, hp_v, suffix, excluded=path_edges)
        if r_path is None:
            raise CertifiedFailureError(
                "no detour reaches the uncovered suffix",
                details={"path": path, "covered": cp},
            )
        labeled.extend(r_path[1:-1])
        for x in r_path:
            hp_v.add(x)
        for a, b in zip(r_path, r_path[1:]):
            hp_e.add(edge_key(a, b))
        counters["cover_steps"] += 1
        _stabilize(
            g,
            h_v,
            path_set,
            path_edges,
            h_e_protected,
            hp_v,
            hp_e,
            labeled,
            counters,
            budget,
        )
    return hp_v, hp_e, labeled, counters


# ---------------------------------------------------------------------------
# the full growth loop


def grow_core(g: Graph, eps: Fraction | int) -> GrowthResult:
    """Iterate path covering until every vertex is within reach of the core."""
    if not is_bridgeless_connected(g):
        br = bridges(g)
        raise PreconditionError(
            "graph must be connected and bridgeless",
            witness=min(br) if br else "disconnected",
        )
    if g.n < 3:
        raise PreconditionError("need at least 3 vertices")
    e = as_fraction(eps)
    if e <= 0:
        raise PreconditionError("epsilon must be positive")
    delta = min_degree(g)
    gval = int(girth(g))
    floor = min_ball_size(delta, gval)
    scale = path_scale(gval, e)
    radius = (gval + 1) // 2 - 1
    reach = scale * gval
    budget = 50 + 10 * (reach + g.n)

    v0 = min(range(g.n), key=lambda v: (-g.degree(v), v))
    h_v: set[int] = {v0}
    h_e: set[tuple[int, int]] = set()
    b_list: list[int] = [v0]
    f_set: set[int] = set(ball(g, v0, radius))
    header = {
        "type": "growth_header",
        "n": g.n,
        "m": g.m,
        "min_degree": delta,
        "girth": gval,
        "epsilon": rational_str(e),
        "ball_floor": floor,
        "scale": scale,
        "radius": radius,
        "reach": reach,
        "v0": v0,
        "base_claimed": sorted(f_set),
    }
    if len(f_set) < floor:
        raise CertifiedFailureError(
            "base ball beneath the floor", details={"header": header}
        )

    iterations: list[IterationRecord] = []
    while True:
        dist = bfs_distances(g, h_v)
        far = max(dist)
        if far < reach:
            break
        if len(iterations) >= g.n:
            raise CertifiedFailureError(
                "more growth iterations than vertices",
                details={"header": header},
            )
        target = min(v for v in range(g.n) if dist[v] == reach)
        path = shortest_path_between(g, h_v, (target,))
        path_edges = [(a, b) for a, b in zip(path, path[1:])]
        hp_v, hp_e, labeled, counters = cover_path(g, h_v, h_e, path, budget)

        sel = labeled[gval - 1 :: gval]
        fallback = len(sel) < scale
        if fallback:
            centers = [path[c * gval] for c in range(1, scale + 1)]
            balls = [set(ball(g, c, radius)) for c in centers]
        else:
            centers = list(sel)
            balls = [set(ball(g, c, radius, excluded=path_edges)) for c in centers]

        new_b = b_list + centers
        new_f = set(f_set)
        for bl in balls:
            new_f |= bl
        pairwise = all(
            balls[i].isdisjoint(balls[j])
            for i in range(len(balls))
            for j in range(i + 1, len(balls))
        )
        adj = subgraph_adjacency(hp_v, hp_e)
        checks = {
            "bridgeless_connected": is_connected_adj(adj) and not bridges_of(adj),
            "property2": len(new_f) >= floor * len(new_b),
            "property3": Fraction(len(hp_v)) <= (2 * gval + e) * len(new_b),
            "balls_pairwise_disjoint": pairwise,
            "balls_disjoint_from_claimed": all(bl.isdisjoint(f_set) for bl in balls),
            "balls_meet_floor": all(len(bl) >= floor for bl in balls),
            "balls_induce_forest": all(induces_forest(g, bl) for bl in balls),
            "centers_fresh": len(set(new_b)) == len(new_b),
            "path_in_core": set(path) <= hp_v,
        }
        record = IterationRecord(
            index=len(iterations),
            path=tuple(path),
            labeled=tuple(labeled),
            centers=tuple(centers),
            fallback=fallback,
            cover_steps=counters["cover_steps"],
            splices=counters["splices"],
            labeled_on_path=counters["labeled_on_path"],
            h_vertices=tuple(sorted(hp_v)),
            h_edges=tuple(sorted(hp_e)),
            b=tuple(new_b),
            f=tuple(sorted(new_f)),
            checks=checks,
        )
        iterations.append(record)
        hard = ("bridgeless_connected", "property2", "property3", "centers_fresh")
        if not all(checks[name] for name in hard):
            trace = GrowthTrace(header, iterations, {})
            raise CertifiedFailureError(
                "growth invariant failed",
                details={"failed": [k for k in hard if not checks[k]], "trace": trace},
            )
        h_v, h_e = hp_v, hp_e
        b_list, f_set = new_b, new_f

    dist = bfs_distances(g, h_v)
    final = {
        "type": "growth_final",
        "iterations": len(iterations),
        "max_distance": int(max(dist)),
        "property1": max(dist) <= reach - 1,
        "core_vertex_count": len(h_v),
        "center_count": len(b_list),
        "claimed_count": len(f_set),
    }
    trace = GrowthTrace(header, iterations, final)
    if not final["property1"]:  # pragma: no cover - loop exit guarantees this
        raise CertifiedFailureError("reach invariant failed", details={"trace": trace})
    return GrowthResult(
        core_vertices=frozenset(h_v),
        core_edges=frozenset(h_e),
        centers=tuple(b_list),
        claimed=frozenset(f_set),
        trace=trace,
        min_degree=delta,
        girth=gval,
        epsilon=e,
        ball_floor=floor,
        scale=scale,
        radius=radius,
        reach=reach,
    )
