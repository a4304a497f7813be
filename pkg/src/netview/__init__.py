"""netview: 3D protein-interaction network analysis and visualization engine."""

from .errors import NetviewError
from .graph import Graph, ParseReport, parse_edge_list, parse_seed_file, neighbors, stats
from .metrics import NodeParams, Path, betweenness_centrality, closeness_centrality, node_params, shortest_path
from .subnet import (
    DistanceMatrix,
    SubnetResult,
    WalkState,
    apsp_subnetwork,
    floyd_warshall,
    kruskal_mst,
    random_walk_scores,
    scores_to_colors,
    steiner_tree,
)
from .layout import (
    CommunityAssignment,
    Layout,
    LayoutParams,
    circular_barycenter,
    clustered_circular,
    force_directed_3d,
    louvain_communities,
    modularity,
)
from .scene import (
    Palette,
    Scene,
    VisualSettings,
    apply_highlight,
    apply_path_highlight,
    apply_subnet_emphasis,
    build_scene,
    export_scene,
    import_scene,
)

__version__ = "0.1.0"

__all__ = [
    "NetviewError",
    "Graph",
    "ParseReport",
    "parse_edge_list",
    "parse_seed_file",
    "neighbors",
    "stats",
    "NodeParams",
    "Path",
    "shortest_path",
    "closeness_centrality",
    "betweenness_centrality",
    "node_params",
    "DistanceMatrix",
    "SubnetResult",
    "WalkState",
    "floyd_warshall",
    "apsp_subnetwork",
    "kruskal_mst",
    "steiner_tree",
    "random_walk_scores",
    "scores_to_colors",
    "Layout",
    "LayoutParams",
    "CommunityAssignment",
    "force_directed_3d",
    "circular_barycenter",
    "louvain_communities",
    "clustered_circular",
    "modularity",
    "Scene",
    "VisualSettings",
    "Palette",
    "build_scene",
    "apply_highlight",
    "apply_path_highlight",
    "apply_subnet_emphasis",
    "export_scene",
    "import_scene",
]
