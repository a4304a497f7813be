"""Command-line interface for batch runs and for launching the service."""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path as FilePath

from . import metrics
from .errors import NetviewError, UnknownLabelError
from .graph import parse_edge_list, parse_seed_file, stats
from .layout import LayoutParams
from .scene import (
    DEFAULT_SCORE_PALETTE,
    apply_path_highlight,
    build_scene,
    export_scene,
)
from .service import (
    DEFAULT_PORT,
    PORT_ENV_VAR,
    compute_layout,
    run_subnet,
    subnet_scene,
    subnet_summary,
)


def _load_graph(path: str, separator: str = "auto"):
    text = FilePath(path).read_text(encoding="utf-8")
    graph, report = parse_edge_list(text, separator)
    return graph, report


def _default_layout(graph, seed: int = 0):
    return compute_layout(graph, "force", LayoutParams(), seed)


def _write_scene(scene, out_path: str) -> None:
    FilePath(out_path).write_bytes(export_scene(scene))


def _cmd_stats(args) -> int:
    graph, _ = _load_graph(args.file)
    counts = stats(graph)
    print(
        f"nodes={counts['node_count']} edges={counts['edge_count']} "
        f"components={counts['connected_component_count']}"
    )
    return 0


def _cmd_layout(args) -> int:
    graph, _ = _load_graph(args.file)
    params = LayoutParams()
    if args.iters is not None:
        params = LayoutParams(iterations=args.iters, barycenter_sweeps=args.iters)
    layout = compute_layout(graph, args.algo, params, args.seed)
    scene = build_scene(graph, layout, source_file=os.path.basename(args.file))
    _write_scene(scene, args.output)
    print(f"wrote {args.output} ({graph.node_count} nodes, {graph.edge_count} edges)")
    return 0


def _cmd_path(args) -> int:
    graph, _ = _load_graph(args.file)
    endpoints = []
    for label in (args.from_label, args.to_label):
        node = graph.id_of(label)
        if node is None:
            raise UnknownLabelError([(label, 0)])
        endpoints.append(node)
    path = metrics.shortest_path(graph, endpoints[0], endpoints[1])
    print(" ".join(graph.labels[v] for v in path.nodes))
    if args.output:
        layout = _default_layout(graph)
        scene = build_scene(graph, layout, source_file=os.path.basename(args.file))
        _write_scene(apply_path_highlight(scene, path), args.output)
        print(f"wrote {args.output}")
    return 0


def _cmd_subnet(args) -> int:
    graph, _ = _load_graph(args.file)
    seed_text = FilePath(args.seeds).read_text(encoding="utf-8")
    seeds = parse_seed_file(seed_text, graph)
    result = run_subnet(graph, args.algo, seeds, args.iters, args.restart)
    print(
        f"subnet nodes={len(result.nodes)} edges={len(result.edges)} "
        f"total_weight={result.total_weight:g}"
        + (f" warning={result.warning}" if result.warning else "")
    )
    if args.output:
        layout = _default_layout(graph)
        base = build_scene(graph, layout, source_file=os.path.basename(args.file))
        scene = subnet_scene(base, result, DEFAULT_SCORE_PALETTE, args.algo)
        _write_scene(scene, args.output)
        print(f"wrote {args.output}")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import SessionStore, create_app

    graph, _ = _load_graph(args.file)
    store = SessionStore()
    session = store.create(graph, source_name=os.path.basename(args.file))
    port = args.port
    if port is None:
        port = int(os.environ.get(PORT_ENV_VAR, DEFAULT_PORT))
    app = create_app(store)
    print(f"session {session.session_id} preloaded from {args.file}")
    print(f"serving on http://127.0.0.1:{port}")
    uvicorn.run(app, host="127.0.0.1", port=port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netview",
        description="Protein-interaction network analysis: stats, layouts, paths, subnetworks, HTTP service.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_stats = sub.add_parser("stats", help="print node/edge/component counts")
    p_stats.add_argument("file")
    p_stats.set_defaults(func=_cmd_stats)

    p_layout = sub.add_parser("layout", help="compute a 3D layout and write a scene file")
    p_layout.add_argument("file")
    p_layout.add_argument(
        "--algo", required=True, choices=["force", "circular", "louvain-circular"]
    )
    p_layout.add_argument("--seed", type=int, default=0)
    p_layout.add_argument("--iters", type=int, default=None)
    p_layout.add_argument("-o", "--output", required=True)
    p_layout.set_defaults(func=_cmd_layout)

    p_path = sub.add_parser("path", help="shortest path between two labeled nodes")
    p_path.add_argument("file")
    p_path.add_argument("--from", dest="from_label", required=True, metavar="LABEL")
    p_path.add_argument("--to", dest="to_label", required=True, metavar="LABEL")
    p_path.add_argument("-o", "--output", default=None)
    p_path.set_defaults(func=_cmd_path)

    p_subnet = sub.add_parser("subnet", help="subnetwork from a seed file")
    p_subnet.add_argument("file")
    p_subnet.add_argument("--algo", required=True, choices=["apsp", "steiner", "rwr"])
    p_subnet.add_argument("--seeds", required=True, metavar="SEEDFILE")
    p_subnet.add_argument("--iters", type=int, default=100)
    p_subnet.add_argument("--restart", type=float, default=0.15)
    p_subnet.add_argument("-o", "--output", default=None)
    p_subnet.set_defaults(func=_cmd_subnet)

    p_serve = sub.add_parser("serve", help="start the local HTTP service")
    p_serve.add_argument("file")
    p_serve.add_argument("--port", type=int, default=None)
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def cli_run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except NetviewError as err:
        print(f"error: {err.name}: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_run(sys.argv[1:]))


if __name__ == "__main__":
    main()
