#!/usr/bin/env python3
"""Regenerate the bundled glioblastoma interaction fixture.

Deterministic: a fixed seed drives a preferential-attachment tree over a
curated list of 83 GBM-associated gene symbols, then extra interactions
are added up to 106 edges total. The output is committed at
data/gbm_edges.txt; rerunning this script must reproduce it byte for byte.
"""

from __future__ import annotations

import random
from pathlib import Path

GENES = [
    "TP53", "EGFR", "PTEN", "PIK3CA", "PIK3R1", "IDH1", "RB1", "NF1",
    "CDKN2A", "CDKN2B", "CDK4", "CDK6", "MDM2", "MDM4", "PDGFRA", "MET",
    "ATRX", "TERT", "STAG2", "BRAF", "H3F3A", "DAXX", "SMARCA4", "ARID1A",
    "CIC", "FUBP1", "NOTCH1", "AKT1", "AKT3", "MTOR", "TSC1", "TSC2",
    "MSH6", "MLH1", "POLE", "GLI1", "PTCH1", "SOX2", "OLIG2", "NES",
    "GFAP", "VIM", "MKI67", "CDK2", "CCND1", "CCND2", "CCNE1", "E2F1",
    "MYC", "MYCN", "MAX", "KRAS", "NRAS", "HRAS", "RAF1", "MAP2K1",
    "MAPK1", "MAPK3", "STAT3", "JAK2", "IL6", "VEGFA", "KDR", "FLT1",
    "HIF1A", "EPAS1", "CA9", "SLC2A1", "LDHA", "PGK1", "FGFR1", "FGFR3",
    "IGF1R", "IRS1", "GRB2", "SOS1", "SHC1", "SRC", "FYN", "PTK2",
    "BCL2", "BAX", "CASP3",
]

NODE_COUNT = 83
EDGE_COUNT = 106
SEED = 83106


def build_edges() -> list[tuple[str, str]]:
    assert len(GENES) == NODE_COUNT, len(GENES)
    rng = random.Random(SEED)
    edges: set[tuple[int, int]] = set()

    # spanning tree with preferential attachment: earlier (better known)
    # genes collect more partners, TP53/EGFR/PTEN end up as hubs
    attach_pool = [0]
    for v in range(1, NODE_COUNT):
        u = rng.choice(attach_pool)
        edges.add((min(u, v), max(u, v)))
        attach_pool.extend([u, v])

    while len(edges) < EDGE_COUNT:
        u = rng.choice(attach_pool)
        v = rng.randrange(NODE_COUNT)
        if u != v and (min(u, v), max(u, v)) not in edges:
            edges.add((min(u, v), max(u, v)))
            attach_pool.extend([u, v])

    return [(GENES[u], GENES[v]) for u, v in sorted(edges)]


def main() -> None:
    out = Path(__file__).resolve().parent.parent / "data" / "gbm_edges.txt"
    out.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"{a},{b}" for a, b in build_edges()]
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {out} ({NODE_COUNT} genes, {len(lines)} interactions)")


if __name__ == "__main__":
    main()
