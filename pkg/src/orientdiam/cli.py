"""Command-line interface: analyze, orient, oracle, gen, experiment, verify."""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from .bounds import (
    degree_only_bound,
    diameter_bound,
    min_ball_size,
    parse_rational,
    path_scale,
    rational_str,
)
from .errors import (
    BudgetExceededError,
    CertifiedFailureError,
    GraphFormatError,
    InfeasibleSpecError,
    PreconditionError,
)
from .generators import FamilySpec, corpus, generate
from .graph import (
    UNREACHABLE,
    Graph,
    ball,
    bfs_distances,
    bridges_of,
    diameter,
    format_graph,
    girth,
    is_bridgeless_connected,
    is_connected_adj,
    min_degree,
    parse_graph,
)
from .growth import subgraph_adjacency
from .extension import core_directed_diameter, measure_extendability
from .oracle import directed_diameter_of_arcs, exact_oriented_diameter
from .orientation import (
    Orientation,
    directed_diameter,
    format_orientation,
    is_strong,
    parse_orientation,
)
from .pipeline import run_pipeline

CSV_COLUMNS = [
    "label",
    "n",
    "m",
    "delta",
    "girth",
    "epsilon",
    "h",
    "L",
    "core_bound",
    "additive_constant",
    "achieved",
    "oracle",
    "degree_only_bound",
    "ok",
]


def _read_graph(path: str) -> Graph:
    return parse_graph(Path(path).read_text())


def _json_number(value):
    """Map unreachable/infinite metrics to null for JSON output."""
    if value == UNREACHABLE:
        return None
    return int(value)


def cmd_analyze(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    record = {
        "n": g.n,
        "m": g.m,
        "min_degree": min_degree(g) if g.n else 0,
        "girth": _json_number(girth(g)),
        "bridgeless": is_bridgeless_connected(g),
        "diameter": _json_number(diameter(g)),
    }
    print(json.dumps(record))
    return 0


def cmd_orient(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    result = run_pipeline(g, args.epsilon)
    if args.emit:
        text = format_orientation(result.orientation)
        Path(args.emit).write_text(text)
        back = parse_orientation(Path(args.emit).read_text(), g)
        if back.arcs() != result.orientation.arcs():
            raise CertifiedFailureError("emitted orientation did not round-trip")
    if args.trace:
        lines = [json.dumps(rec) for rec in result.trace_records()]
        Path(args.trace).write_text("\n".join(lines) + "\n")
    print(json.dumps(result.to_json_dict(), indent=2))
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    res = exact_oriented_diameter(g, budget=args.budget)
    record = {
        "value": res.value,
        "feasible": res.feasible,
        "leaves": res.leaves,
        "witness": [list(arc) for arc in res.witness] if res.witness else None,
    }
    print(json.dumps(record))
    return 0 if res.feasible else 3


def cmd_gen(args: argparse.Namespace) -> int:
    spec = FamilySpec(args.family, tuple(args.params))
    g = generate(spec)
    text = format_graph(g, comment=spec.label)
    if args.out:
        Path(args.out).write_text(text)
    else:
        print(text, end="")
    return 0


def _experiment_row(payload: tuple) -> dict[str, str]:
    """One experiment row; module-level so worker processes can import it."""
    family, params, eps_str, budget = payload
    spec = FamilySpec(family, tuple(params))
    eps = parse_rational(eps_str)
    row = {c: "" for c in CSV_COLUMNS}
    row["label"] = spec.label
    row["epsilon"] = rational_str(eps)
    row["ok"] = "false"
    try:
        g = generate(spec)
    except (InfeasibleSpecError, ValueError):
        return row
    delta = min_degree(g)
    gval = int(girth(g))
    bound = diameter_bound(g.n, delta, gval, eps)
    row.update(
        {
            "n": str(g.n),
            "m": str(g.m),
            "delta": str(delta),
            "girth": str(gval),
            "h": str(bound.ball_size),
            "L": str(bound.scale),
            "core_bound": rational_str(bound.core_term),
            "additive_constant": str(bound.additive_term),
            "degree_only_bound": rational_str(degree_only_bound(g.n, delta)),
        }
    )
    if g.m <= budget:
        res = exact_oriented_diameter(g, budget=budget)
        if res.value is not None:
            row["oracle"] = str(res.value)
    try:
        result = run_pipeline(g, eps)
    except CertifiedFailureError:
        return row
    row["achieved"] = str(result.achieved)
    row["ok"] = "true" if result.all_passed else "false"
    return row


def cmd_experiment(args: argparse.Namespace) -> int:
    specs = corpus(args.profile, args.seed)
    payloads = [
        (s.family, s.params, rational_str(args.epsilon), args.budget) for s in specs
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_experiment_row, payloads))
    else:
        rows = [_experiment_row(p) for p in payloads]
    lines = [",".join(CSV_COLUMNS)]
    lines.extend(",".join(row[c] for c in CSV_COLUMNS) for row in rows)
    Path(args.out).write_text("\n".join(lines) + "\n")
    failed = sum(1 for row in rows if row["ok"] != "true")
    summary = {
        "profile": args.profile,
        "seed": args.seed,
        "epsilon": rational_str(args.epsilon),
        "jobs": args.jobs,
        "graphs": len(rows),
        "failed": failed,
        "out": args.out,
    }
    print(json.dumps(summary))
    return 4 if failed else 0


def _check(checks: list[dict], name: str, ok: bool, detail: str = "") -> None:
    checks.append({"name": name, "ok": bool(ok), "detail": detail})


def _load_trace(path: str) -> list[dict]:
    records = []
    for idx, line in enumerate(Path(path).read_text().splitlines()):
        if not line.strip():
            continue
        try:
            records.append(json.loads(line))
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"trace line {idx + 1} is not JSON: {exc}") from exc
    if not records:
        raise GraphFormatError("trace file is empty")
    return records


def _replay_growth(g: Graph, records: list[dict], checks: list[dict]) -> dict:
    """Recompute the growth-phase invariants from scratch against the trace.

    Returns the final core as {"vertices": set, "edges": set} for later phases.
    """
    header = next(r for r in records if r.get("type") == "growth_header")
    eps = parse_rational(header["epsilon"])
    delta = min_degree(g)
    gval = int(girth(g))
    floor = min_ball_size(delta, gval)
    scale = path_scale(gval, eps)
    radius = (gval + 1) // 2 - 1
    reach = scale * gval
    _check(
        checks,
        "growth_header_consistent",
        header["n"] == g.n
        and header["m"] == g.m
        and header["min_degree"] == delta
        and header["girth"] == gval
        and header["ball_floor"] == floor
        and header["scale"] == scale
        and header["radius"] == radius
        and header["reach"] == reach,
        f"delta={delta} girth={gval} floor={floor} scale={scale}",
    )
    v0 = int(header["v0"])
    f_set = set(ball(g, v0, radius))
    _check(
        checks,
        "growth_base_ball",
        f_set == set(header["base_claimed"]) and len(f_set) >= floor,
        f"|ball({v0})|={len(f_set)}",
    )
    b_count = 1
    h_v: set[int] = {v0}
    h_e: set[tuple[int, int]] = set()
    iters = [r for r in records if r.get("type") == "growth_iteration"]
    for rec in iters:
        idx = rec["index"]
        path = [int(v) for v in rec["path"]]
        path_edges = [(a, b) for a, b in zip(path, path[1:])]
        centers = [int(c) for c in rec["centers"]]
        new_h_v = {int(v) for v in rec["h_vertices"]}
        new_h_e = {(int(u), int(v)) for u, v in rec["h_edges"]}
        adj = subgraph_adjacency(new_h_v, new_h_e)
        edges_real = all(g.has_edge(u, v) for u, v in new_h_e)
        grew = h_v <= new_h_v and h_e <= new_h_e and set(path) <= new_h_v
        _check(
            checks,
            f"iter{idx}_core_bridgeless",
            edges_real and grew and is_connected_adj(adj) and not bridges_of(adj),
            f"{len(new_h_v)} vertices, {len(new_h_e)} edges",
        )
        excluded = () if rec["fallback"] else tuple(path_edges)
        balls = [set(ball(g, c, radius, excluded=excluded)) for c in centers]
        new_f = set(f_set)
        for bl in balls:
            new_f |= bl
        b_count += len(centers)
        _check(
            checks,
            f"iter{idx}_claimed_matches",
            new_f == {int(v) for v in rec["f"]} and b_count == len(rec["b"]),
            f"|F|={len(new_f)} |B|={b_count}",
        )
        _check(
            checks,
            f"iter{idx}_property2",
            len(new_f) >= floor * b_count,
            f"{len(new_f)} >= {floor}*{b_count}",
        )
        _check(
            checks,
            f"iter{idx}_property3",
            Fraction(len(new_h_v)) <= (2 * gval + eps) * b_count,
            f"{len(new_h_v)} <= (2*{gval}+{rational_str(eps)})*{b_count}",
        )
        _check(
            checks,
            f"iter{idx}_centers_fresh",
            len(set(rec["b"])) == len(rec["b"]),
            f"{len(rec['b'])} centers",
        )
        h_v, h_e, f_set = new_h_v, new_h_e, new_f
    dist = bfs_distances(g, h_v)
    _check(
        checks,
        "growth_property1",
        max(dist) <= reach - 1,
        f"max distance {_json_number(max(dist))} <= {reach - 1}",
    )
    return {"vertices": h_v, "edges": h_e, "epsilon": eps}


def _replay_extension(
    g: Graph,
    records: list[dict],
    core: dict,
    o: Orientation | None,
    checks: list[dict],
) -> None:
    header = next(r for r in records if r.get("type") == "extension_header")
    final = next(
        (r for r in records if r.get("type") == "extension_final"), None
    )
    if final is None:
        raise GraphFormatError("trace has extension records but no final verdict")
    core_v = core["vertices"]
    s = measure_extendability(g, core_v)
    allowed = 4 * math.comb(s + 1, 2)
    _check(
        checks,
        "extension_header_consistent",
        header["core_size"] == len(core_v)
        and header["s"] == s
        and header["allowed_increase"] == allowed,
        f"s={s} allowed={allowed}",
    )
    increase_ok = (
        final["strong"]
        and final["increase"] == final["diameter"] - final["core_diameter"]
        and final["increase"] <= allowed
    )
    _check(
        checks,
        "extension_increase_within_allowed",
        increase_ok,
        f"{final['increase']} <= {allowed}",
    )
    if o is not None:
        o_core = Orientation(g)
        for u, v in core["edges"]:
            head = o.direction(u, v)
            tail = u if head == v else v
            o_core.assign(tail, head)
        core_diam = core_directed_diameter(o_core, core_v)
        _check(
            checks,
            "extension_core_diameter_matches",
            core_diam == final["core_diameter"],
            f"recomputed {core_diam}",
        )
        full = directed_diameter(o)
        _check(
            checks,
            "extension_diameter_matches",
            full == final["diameter"],
            f"recomputed {_json_number(full)}",
        )


def cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    if not args.orientation and not args.trace:
        raise GraphFormatError("need --orientation and/or --trace to verify")
    checks: list[dict] = []
    o: Orientation | None = None
    if args.orientation:
        o = parse_orientation(Path(args.orientation).read_text(), g)
        strong = is_strong(o)
        _check(checks, "orientation_strong", strong)
        if strong:
            fast = directed_diameter(o)
            slow = directed_diameter_of_arcs(g.n, o.arcs())
            _check(
                checks,
                "orientation_diameter_cross_check",
                fast == slow,
                f"{_json_number(fast)} == {_json_number(slow)}",
            )
    if args.trace:
        records = _load_trace(args.trace)
        types = {r.get("type") for r in records}
        if "growth_header" not in types:
            raise GraphFormatError("trace has no growth records")
        core = _replay_growth(g, records, checks)
        if "extension_header" in types:
            _replay_extension(g, records, core, o, checks)
        pipeline_final = [r for r in records if r.get("type") == "pipeline_final"]
        if pipeline_final:
            rec = pipeline_final[0]
            delta = min_degree(g)
            gval = int(girth(g))
            bound = diameter_bound(g.n, delta, gval, core["epsilon"])
            _check(
                checks,
                "achieved_within_total",
                rec["bound_total"] == rational_str(bound.total)
                and Fraction(rec["achieved"]) <= bound.total,
                f"{rec['achieved']} <= {rational_str(bound.total)}",
            )
            if o is not None:
                _check(
                    checks,
                    "achieved_matches_orientation",
                    directed_diameter(o) == rec["achieved"],
                    f"trace says {rec['achieved']}",
                )
    ok = all(c["ok"] for c in checks)
    print(json.dumps({"checks": checks, "ok": ok}, indent=2))
    return 0 if ok else 4


def _fraction(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orientdiam",
        description="Constructive strong orientations with certified diameter bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="print basic metrics of a graph file")
    p.add_argument("graph")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("orient", help="run the full construction on a graph file")
    p.add_argument("graph")
    p.add_argument("--epsilon", type=_fraction, default=Fraction(1, 2), metavar="P/Q")
    p.add_argument("--emit", metavar="FILE", help="write the orientation here")
    p.add_argument("--trace", metavar="FILE", help="write the replayable trace here")
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("oracle", help="exhaustive minimum directed diameter")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=24, metavar="EDGES")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="write a generated family member")
    p.add_argument("family")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("experiment", help="run a corpus and write a CSV")
    p.add_argument("profile")
    p.add_argument("--epsilon", type=_fraction, default=Fraction(1, 2), metavar="P/Q")
    p.add_argument("--out", required=True, metavar="FILE")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=24, metavar="EDGES")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("verify", help="re-check an orientation and/or trace file")
    p.add_argument("graph")
    p.add_argument("--orientation", metavar="FILE")
    p.add_argument("--trace", metavar="FILE")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (PreconditionError, BudgetExceededError, InfeasibleSpecError) as exc:
        witness = getattr(exc, "witness", None)
        suffix = f" (witness: {witness})" if witness is not None else ""
        print(f"error: {exc}{suffix}", file=sys.stderr)
        return 3
    except CertifiedFailureError as exc:
        print(f"certified failure: {exc}", file=sys.stderr)
        return 4
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
