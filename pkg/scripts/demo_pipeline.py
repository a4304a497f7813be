#!/usr/bin/env python3
"""End-to-end run on the bundled GBM network.

Parses the fixture, prints node parameters for the TP53 hub, finds a
path, runs all three subnetwork algorithms and writes scene files under
out/ (force layout plus a walk-scored subnet scene). Deterministic.
"""

from __future__ import annotations

from pathlib import Path

from netview.graph import parse_edge_list, parse_seed_file, stats
from netview.layout import LayoutParams, force_directed_3d
from netview.metrics import node_params, shortest_path
from netview.scene import (
    DEFAULT_SCORE_PALETTE,
    apply_path_highlight,
    build_scene,
    export_scene,
)
from netview.service import run_subnet, subnet_scene

ROOT = Path(__file__).resolve().parent.parent


def main() -> None:
    text = (ROOT / "data" / "gbm_edges.txt").read_text(encoding="utf-8")
    graph, report = parse_edge_list(text)
    print("network:", stats(graph))
    if report.malformed_lines:
        print("skipped lines:", report.malformed_lines)

    tp53 = graph.id_of("TP53")
    params = node_params(graph, tp53)
    print(
        f"TP53: degree={params.degree} closeness={params.closeness:.4f} "
        f"betweenness={params.betweenness:.4f}"
    )

    layout = force_directed_3d(graph, LayoutParams(iterations=300), rng_seed=7)
    base = build_scene(
        graph, layout, source_file="gbm_edges.txt", created="2026-01-01T00:00:00Z"
    )

    out_dir = ROOT / "out"
    out_dir.mkdir(exist_ok=True)
    (out_dir / "gbm.scene.json").write_bytes(export_scene(base))

    path = shortest_path(graph, tp53, graph.id_of("CASP3"))
    print("TP53 -> CASP3:", " ".join(graph.labels[v] for v in path.nodes))
    (out_dir / "gbm_path.scene.json").write_bytes(
        export_scene(apply_path_highlight(base, path))
    )

    seeds = parse_seed_file(
        (ROOT / "data" / "gbm_seeds.txt").read_text(encoding="utf-8"), graph
    )
    for algo in ("apsp", "steiner", "rwr"):
        result = run_subnet(graph, algo, seeds, iterations=50, restart_prob=0.15)
        print(
            f"{algo}: {len(result.nodes)} nodes, {len(result.edges)} edges, "
            f"weight {result.total_weight:g}"
        )
        scene = subnet_scene(base, result, DEFAULT_SCORE_PALETTE, algo)
        (out_dir / f"gbm_{algo}.scene.json").write_bytes(export_scene(scene))

    print(f"scenes written to {out_dir}/")


if __name__ == "__main__":
    main()
