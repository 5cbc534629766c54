"""Command-line interface.

Exit codes: 0 success, 2 usage errors (argparse), 3 data errors.

`solve` prints one JSON object; `stream` prints one JSON object per emitted
window (JSON Lines); `compare` prints TSV rows `t  |S_a|  |S_b|  jaccard`;
`debug` exposes the plumbing (single distances with witness paths, distance
tables, DOT dumps of the transformed graph).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import transform
from ._parallel import thread_count
from .errors import TempocError
from .graph import Window, load_edges, load_snapshot_dir, project
from .inefficiency import inefficiency
from .search import Solution, solve
from .sfp import all_pairs, sssp
from .stream import AdaptiveConfig, QueryState, WindowBuffer, step


def _alpha(text: str) -> float:
    try:
        val = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 <= val <= 1.0:
        raise argparse.ArgumentTypeError(f"alpha must be in [0, 1], got {val}")
    return val


def _query(text: str) -> list[int]:
    try:
        ids = [int(f) for f in text.split(",") if f != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad vertex list: {text!r}") from None
    if not ids:
        raise argparse.ArgumentTypeError("query must name at least one vertex")
    return ids


def _window(text: str) -> Window:
    try:
        a, b = text.split(":")
        start, end = int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"window must look like start:end, got {text!r}"
        ) from None
    if end < start or start < 0:
        raise argparse.ArgumentTypeError(f"bad window bounds {text!r}")
    return Window(end=end, length=end - start + 1)


def _positive(text: str) -> int:
    try:
        val = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if val < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {val}")
    return val


def _load(path: str):
    p = Path(path)
    try:
        if p.is_dir():
            return load_snapshot_dir(p)
        return load_edges(p)
    except OSError as exc:
        raise TempocError(f"cannot read {path}: {exc.strerror or exc}") from None


def _rng(args) -> random.Random | None:
    return random.Random(args.seed) if args.seed is not None else None


def _solution_record(t: int, sol: Solution, q_before, q_after) -> dict:
    return {
        "t": t,
        "window": [sol.window.start, sol.window.end],
        "Q_before": sorted(q_before),
        "Q_after": sorted(q_after),
        "S": sorted(sol.vertices),
        "edges": [[u, v, et] for u, v, et in sorted(sol.induced_edges, key=lambda e: (e[2], e[0], e[1]))],
        "inefficiency": sol.inefficiency,
        "disconnected_query": sorted(sol.disconnected_query),
    }


def cmd_solve(args) -> int:
    g = _load(args.graph)
    w = args.window if args.window is not None else g.window
    sol = solve(
        g,
        w,
        args.alpha,
        frozenset(args.query),
        depth=args.depth,
        threads=thread_count(args.threads),
        keep_trace=args.trace,
        rng=_rng(args),
    )
    out = {
        "window": [sol.window.start, sol.window.end],
        "alpha": args.alpha,
        "query": sorted(sol.query),
        "vertices": sorted(sol.vertices),
        "edges": [[u, v, t] for u, v, t in sorted(sol.induced_edges, key=lambda e: (e[2], e[0], e[1]))],
        "inefficiency": sol.inefficiency,
        "disconnected_query": sorted(sol.disconnected_query),
    }
    if args.trace:
        out["trace"] = [[v, val] for v, val in sol.trace]
    if args.pairs:
        val = inefficiency(project(g, w), args.alpha, sol.vertices, per_pair=True)
        out["pairs"] = [[u, v, c] for (u, v), c in sorted(val.per_pair.items())]
    print(json.dumps(out))
    return 0


def _stream_lines(args, alpha: float):
    g = _load(args.graph)
    cfg = AdaptiveConfig(
        window_length=args.window_size,
        alpha=alpha,
        depth=args.depth,
        lambda_in=args.lambda_in,
        lambda_out=args.lambda_out,
        allow_reentry=not args.no_reentry,
        emit_partial=args.emit_partial,
        threads=thread_count(args.threads),
        rng=_rng(args),
    )
    state = QueryState.initial(args.query)
    missing = sorted(state.q0 - g.vertices)
    if missing:
        raise TempocError(f"query vertices not in graph: {missing}")
    buffer = WindowBuffer(cfg.window_length, g.vertices)
    for t in range(g.t_min, g.t_max + 1):
        q_before = frozenset(state.q)
        sol, state = step(state, buffer, (t, g.snapshots[t]), cfg)
        if sol is not None:
            yield t, sol, q_before, frozenset(state.q)


def cmd_stream(args) -> int:
    sink = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        for t, sol, qb, qa in _stream_lines(args, args.alpha):
            sink.write(json.dumps(_solution_record(t, sol, qb, qa)) + "\n")
    finally:
        if args.out:
            sink.close()
    return 0


def _jaccard(a: frozenset, b: frozenset) -> float:
    if not a and not b:
        return 1.0
    return len(a & b) / len(a | b)


def cmd_compare(args) -> int:
    rows_a = list(_stream_lines(args, args.alpha_a))
    rows_b = list(_stream_lines(args, args.alpha_b))
    sink = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        for (t, sa, _, _), (tb, sb, _, _) in zip(rows_a, rows_b):
            assert t == tb
            j = _jaccard(sa.vertices, sb.vertices)
            sink.write(f"{t}\t{len(sa.vertices)}\t{len(sb.vertices)}\t{j:.6f}\n")
    finally:
        if args.out:
            sink.close()
    return 0


def cmd_debug_sfp(args) -> int:
    g = _load(args.graph)
    wg = project(g, args.window) if args.window is not None else g
    if args.src not in g.vertices or args.dst not in g.vertices:
        raise TempocError("endpoint not in graph")
    tg = transform.build(wg, args.alpha, sources=(args.src,), sinks=(args.dst,))
    dm = sssp(tg, transform.source(args.src))
    d = dm.dist[args.dst]
    print(f"{d:.10g}" if d != float("inf") else "inf")
    if d != float("inf"):
        nodes = dm.path_to(transform.sink(args.dst))
        edges = transform.temporal_path(tg, nodes)
        print(",".join(f"({u},{v},{t})" for u, v, t in edges))
    return 0


def cmd_debug_table(args) -> int:
    g = _load(args.graph)
    wg = project(g, args.window) if args.window is not None else g
    m = all_pairs(wg, args.alpha, wg.vertices, threads=thread_count(args.threads))

    def fmt(x: float) -> str:
        return "inf" if x == float("inf") else f"{x:.10g}"

    print("\t".join(["u\\v"] + [str(v) for v in m.vertices]))
    for i, u in enumerate(m.vertices):
        print("\t".join([str(u)] + [fmt(float(m.values[i, j])) for j in range(len(m.vertices))]))
    return 0


def cmd_debug_dot(args) -> int:
    g = _load(args.graph)
    wg = project(g, args.window) if args.window is not None else g
    q = args.query or []
    tg = transform.build(wg, args.alpha, sources=q, sinks=q)
    print(transform.to_dot(tg))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tempoc",
        description="minimum temporal-inefficiency subgraphs around query vertices",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, window=True):
        p.add_argument("--graph", required=True, help="edge list file or snapshot directory")
        p.add_argument("--threads", type=_positive, default=None,
                       help="worker threads (default: TEMPOC_THREADS or 1)")
        p.add_argument("--depth", type=_positive, default=1,
                       help="Steiner recursion depth (default 1)")
        p.add_argument("--seed", type=int, default=None,
                       help="seed for randomized fallback tree picks")
        if window:
            p.add_argument("--window", type=_window, default=None, metavar="START:END",
                           help="timestamp window (default: full span)")

    p_solve = sub.add_parser("solve", help="solve one window")
    common(p_solve)
    p_solve.add_argument("--query", type=_query, required=True, metavar="IDS")
    p_solve.add_argument("--alpha", type=_alpha, required=True)
    p_solve.add_argument("--trace", action="store_true", help="include the peeling trace")
    p_solve.add_argument("--pairs", action="store_true", help="include per-pair contributions")
    p_solve.set_defaults(func=cmd_solve)

    def stream_flags(p):
        p.add_argument("--query", type=_query, required=True, metavar="IDS")
        p.add_argument("--window-size", type=_positive, required=True)
        p.add_argument("--lambda-in", type=_positive, default=None)
        p.add_argument("--lambda-out", type=_positive, default=None)
        p.add_argument("--no-reentry", action="store_true",
                       help="removed vertices may not rejoin the query set")
        p.add_argument("--emit-partial", action="store_true",
                       help="also emit solutions for warm-up windows")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p_stream = sub.add_parser("stream", help="sliding-window solve over a stream")
    common(p_stream, window=False)
    stream_flags(p_stream)
    p_stream.add_argument("--alpha", type=_alpha, required=True)
    p_stream.set_defaults(func=cmd_stream)

    p_cmp = sub.add_parser("compare", help="jaccard overlap of two alpha runs")
    common(p_cmp, window=False)
    stream_flags(p_cmp)
    p_cmp.add_argument("--alpha-a", type=_alpha, required=True)
    p_cmp.add_argument("--alpha-b", type=_alpha, required=True)
    p_cmp.set_defaults(func=cmd_compare)

    p_dbg = sub.add_parser("debug", help="inspection tools")
    dbg = p_dbg.add_subparsers(dest="debug_command", required=True)

    p_sfp = dbg.add_parser("sfp", help="one distance with its witness path")
    common(p_sfp)
    p_sfp.add_argument("--alpha", type=_alpha, required=True)
    p_sfp.add_argument("--from", dest="src", type=int, required=True)
    p_sfp.add_argument("--to", dest="dst", type=int, required=True)
    p_sfp.set_defaults(func=cmd_debug_sfp)

    p_tbl = dbg.add_parser("table", help="all-pairs distance table as TSV")
    common(p_tbl)
    p_tbl.add_argument("--alpha", type=_alpha, required=True)
    p_tbl.set_defaults(func=cmd_debug_table)

    p_dot = dbg.add_parser("dot", help="DOT dump of the transformed graph")
    common(p_dot)
    p_dot.add_argument("--alpha", type=_alpha, required=True)
    p_dot.add_argument("--query", type=_query, default=None,
                       help="add source/sink dummies for these vertices")
    p_dot.set_defaults(func=cmd_debug_dot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TempocError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
