#!/usr/bin/env python3
"""Regenerate the scene fixtures the viewer test suite loads.

All deterministic: fixed layout seed, fixed created timestamp. The two
walk-score scenes share every parameter except the palette, so their
documents may differ only in node colors.
"""

from __future__ import annotations

from pathlib import Path

from netview.graph import parse_edge_list, parse_seed_file
from netview.layout import LayoutParams, force_directed_3d
from netview.scene import Palette, build_scene, export_scene
from netview.service import run_subnet, subnet_scene

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "frontend" / "tests" / "fixtures"

COOL = Palette(stops=((0.0, (0.0, 0.0, 1.0, 1.0)), (0.5, (1.0, 1.0, 1.0, 1.0)), (1.0, (1.0, 0.0, 0.0, 1.0))))
WARM = Palette(stops=((0.0, (0.0, 0.6, 0.1, 1.0)), (1.0, (1.0, 0.2, 0.9, 1.0))))


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    graph, _ = parse_edge_list((ROOT / "data" / "gbm_edges.txt").read_text())
    seeds = parse_seed_file((ROOT / "data" / "gbm_seeds.txt").read_text(), graph)
    layout = force_directed_3d(graph, LayoutParams(iterations=300), rng_seed=7)
    base = build_scene(
        graph, layout, source_file="gbm_edges.txt", created="2026-01-01T00:00:00Z"
    )
    (OUT / "gbm.scene.json").write_bytes(export_scene(base))

    result = run_subnet(graph, "rwr", seeds, iterations=25, restart_prob=0.15)
    for name, palette in (("gbm_rwr_cool", COOL), ("gbm_rwr_warm", WARM)):
        scene = subnet_scene(base, result, palette, "rwr")
        (OUT / f"{name}.scene.json").write_bytes(export_scene(scene))
    print(f"fixtures written to {OUT}/")


if __name__ == "__main__":
    main()
