"""Render-ready scene construction and the versioned JSON interchange format.

A Scene is what the viewer draws: spheres for nodes, lines for edges,
everything already positioned, sized and colored. Export is byte-exact:
keys are sorted, reals are written with six decimal places (half-even),
so the same Scene always serializes to the same bytes on any platform.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from typing import Any, Iterable, Mapping

from .errors import (
    BadPaletteError,
    BadVersionError,
    DanglingEdgeError,
    InvalidNodeError,
    LayoutMismatchError,
    PathNotInSceneError,
    SchemaViolationError,
)
from .graph import Graph
from .layout import Layout
from .metrics import Path

RGBA = tuple[float, float, float, float]

SCENE_VERSION = 1


def _check_rgba(color: Iterable[float], what: str) -> RGBA:
    values = tuple(float(c) for c in color)
    if len(values) != 4 or any(not (0.0 <= c <= 1.0) for c in values):
        raise ValueError(f"{what} must be 4 channels in [0, 1], got {values}")
    return values


@dataclass(frozen=True)
class VisualSettings:
    base_node_size: float = 0.2
    size_by_degree: bool = True
    color_by_degree: bool = True
    label_font_size: float = 1.0
    default_node_color: RGBA = (0.30, 0.55, 0.85, 1.0)
    default_edge_color: RGBA = (0.62, 0.62, 0.62, 1.0)
    highlight_node_color: RGBA = (1.0, 0.0, 0.0, 1.0)
    highlight_edge_color: RGBA = (1.0, 0.5, 0.7, 1.0)
    edge_width: float = 0.05

    def __post_init__(self):
        if self.base_node_size <= 0 or self.edge_width <= 0 or self.label_font_size <= 0:
            raise ValueError("sizes must be positive")
        for name in (
            "default_node_color",
            "default_edge_color",
            "highlight_node_color",
            "highlight_edge_color",
        ):
            object.__setattr__(self, name, _check_rgba(getattr(self, name), name))


@dataclass(frozen=True)
class Palette:
    """Gradient color stops: (position, RGBA) with positions 0 .. 1."""

    stops: tuple[tuple[float, RGBA], ...]

    def __post_init__(self):
        stops = tuple((float(p), _check_rgba(c, "palette stop")) for p, c in self.stops)
        object.__setattr__(self, "stops", stops)
        self.validate()

    def validate(self) -> None:
        if len(self.stops) < 2:
            raise BadPaletteError("palette needs at least 2 stops")
        positions = [p for p, _ in self.stops]
        if any(b <= a for a, b in zip(positions, positions[1:])):
            raise BadPaletteError(f"stop positions must strictly increase, got {positions}")
        if positions[0] != 0.0 or positions[-1] != 1.0:
            raise BadPaletteError("palette must start at 0 and end at 1")

    def color_at(self, t: float) -> RGBA:
        t = min(1.0, max(0.0, t))
        stops = self.stops
        for (p0, c0), (p1, c1) in zip(stops, stops[1:]):
            if t <= p1:
                frac = (t - p0) / (p1 - p0)
                return tuple(a + (b - a) * frac for a, b in zip(c0, c1))
        return stops[-1][1]


# low degree cold blue, high degree warm red
DEGREE_PALETTE = Palette(stops=((0.0, (0.2, 0.4, 0.9, 1.0)), (1.0, (0.9, 0.15, 0.1, 1.0))))
# diverging score gradient used for walk results unless the user edits it
DEFAULT_SCORE_PALETTE = Palette(
    stops=((0.0, (0.0, 0.0, 1.0, 1.0)), (0.5, (1.0, 1.0, 1.0, 1.0)), (1.0, (1.0, 0.0, 0.0, 1.0)))
)


@dataclass(frozen=True)
class SceneNode:
    id: int
    label: str
    position: tuple[float, float, float]
    color: RGBA
    size: float
    is_seed: bool = False
    is_highlighted: bool = False


@dataclass(frozen=True)
class SceneEdge:
    source: int
    target: int
    color: RGBA
    width: float
    is_highlighted: bool = False


@dataclass(frozen=True)
class SceneMetadata:
    layout_name: str
    source_file: str
    created: str
    node_count: int
    edge_count: int


@dataclass(frozen=True)
class Scene:
    version: int
    metadata: SceneMetadata
    nodes: tuple[SceneNode, ...]
    edges: tuple[SceneEdge, ...]

    def node_ids(self) -> set[int]:
        return {n.id for n in self.nodes}

    def edge_keys(self) -> set[tuple[int, int]]:
        return {(min(e.source, e.target), max(e.source, e.target)) for e in self.edges}


def _timestamp() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def build_scene(
    graph: Graph,
    layout: Layout,
    settings: VisualSettings | None = None,
    source_file: str = "",
    created: str | None = None,
) -> Scene:
    """Assemble the drawable scene from a graph and a layout.

    Node size grows linearly with degree (base * (1 + deg/max_deg)) when
    size_by_degree is on; node color follows the fixed degree palette when
    color_by_degree is on.
    """
    settings = settings or VisualSettings()
    positions = layout.positions
    missing = [v for v in range(graph.node_count) if v not in positions]
    if missing:
        raise LayoutMismatchError(f"layout has no position for nodes {missing}")

    max_degree = max((graph.degree(v) for v in range(graph.node_count)), default=0)
    nodes = []
    for v in range(graph.node_count):
        degree = graph.degree(v)
        rel = degree / max_degree if max_degree > 0 else 0.5
        if settings.size_by_degree and max_degree > 0:
            size = settings.base_node_size * (1.0 + degree / max_degree)
        else:
            size = settings.base_node_size
        if settings.color_by_degree:
            color = DEGREE_PALETTE.color_at(rel)
        else:
            color = settings.default_node_color
        nodes.append(
            SceneNode(
                id=v,
                label=graph.labels[v],
                position=tuple(float(c) for c in positions[v]),
                color=color,
                size=size,
            )
        )
    edges = [
        SceneEdge(
            source=u,
            target=v,
            color=settings.default_edge_color,
            width=settings.edge_width,
        )
        for u, v, _ in graph.edges()
    ]
    metadata = SceneMetadata(
        layout_name=layout.algorithm,
        source_file=source_file,
        created=created if created is not None else _timestamp(),
        node_count=len(nodes),
        edge_count=len(edges),
    )
    return Scene(version=SCENE_VERSION, metadata=metadata, nodes=tuple(nodes), edges=tuple(edges))


def apply_highlight(
    scene: Scene,
    selected: int,
    graph: Graph,
    settings: VisualSettings | None = None,
) -> Scene:
    """Recolor the selected node, its neighbors and its incident edges.

    Pure: returns a new scene, input untouched.
    """
    settings = settings or VisualSettings()
    if selected not in scene.node_ids():
        raise InvalidNodeError(selected)
    graph.check_node(selected)
    hot = set(graph.neighbors(selected)) | {selected}
    nodes = tuple(
        replace(n, color=settings.highlight_node_color, is_highlighted=True)
        if n.id in hot
        else n
        for n in scene.nodes
    )
    edges = tuple(
        replace(e, color=settings.highlight_edge_color, is_highlighted=True)
        if selected in (e.source, e.target)
        else e
        for e in scene.edges
    )
    return replace(scene, nodes=nodes, edges=edges)


def apply_path_highlight(
    scene: Scene,
    path: Path,
    settings: VisualSettings | None = None,
) -> Scene:
    """Recolor a found route: its nodes red, its edges pink."""
    settings = settings or VisualSettings()
    ids = scene.node_ids()
    missing_nodes = [v for v in path.nodes if v not in ids]
    path_edges = set(path.edges())
    missing_edges = path_edges - scene.edge_keys()
    if missing_nodes or missing_edges:
        raise PathNotInSceneError(
            f"path references missing nodes {missing_nodes} or edges {sorted(missing_edges)}"
        )
    on_path = set(path.nodes)
    nodes = tuple(
        replace(n, color=settings.highlight_node_color, is_highlighted=True)
        if n.id in on_path
        else n
        for n in scene.nodes
    )
    edges = tuple(
        replace(e, color=settings.highlight_edge_color, is_highlighted=True)
        if (min(e.source, e.target), max(e.source, e.target)) in path_edges
        else e
        for e in scene.edges
    )
    return replace(scene, nodes=nodes, edges=edges)


def apply_subnet_emphasis(
    scene: Scene,
    member_nodes: Iterable[int],
    member_edges: Iterable[tuple[int, int]],
    seeds: Iterable[int] = (),
    node_colors: Mapping[int, RGBA] | None = None,
    dim_factor: float = 0.25,
) -> Scene:
    """Present a subnetwork in context: non-members keep their shape but
    are dimmed to a fraction of their alpha; members optionally recolored
    (e.g. by walk score) and seeds flagged.
    """
    members = set(member_nodes)
    edges_in = {(min(u, v), max(u, v)) for u, v in member_edges}
    seed_set = set(seeds)
    node_colors = node_colors or {}

    def dim(color: RGBA) -> RGBA:
        return (color[0], color[1], color[2], color[3] * dim_factor)

    nodes = []
    for n in scene.nodes:
        if n.id in members:
            color = node_colors.get(n.id, n.color)
            nodes.append(replace(n, color=color, is_seed=n.id in seed_set))
        else:
            nodes.append(replace(n, color=dim(n.color), is_seed=False))
    edges = []
    for e in scene.edges:
        key = (min(e.source, e.target), max(e.source, e.target))
        edges.append(e if key in edges_in else replace(e, color=dim(e.color)))
    return replace(scene, nodes=tuple(nodes), edges=tuple(edges))


# --- serialization ---------------------------------------------------------


def _scene_to_document(scene: Scene) -> dict[str, Any]:
    return {
        "version": scene.version,
        "metadata": {
            "layout_name": scene.metadata.layout_name,
            "source_file": scene.metadata.source_file,
            "created": scene.metadata.created,
            "node_count": scene.metadata.node_count,
            "edge_count": scene.metadata.edge_count,
        },
        "nodes": [
            {
                "id": n.id,
                "label": n.label,
                "position": list(n.position),
                "color": list(n.color),
                "size": n.size,
                "is_seed": n.is_seed,
                "is_highlighted": n.is_highlighted,
            }
            for n in scene.nodes
        ],
        "edges": [
            {
                "source": e.source,
                "target": e.target,
                "color": list(e.color),
                "width": e.width,
                "is_highlighted": e.is_highlighted,
            }
            for e in scene.edges
        ],
    }


def _emit(value: Any) -> str:
    # fixed six-decimal reals and sorted keys make the output byte-stable
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.6f}"
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        inner = ",".join(f"{json.dumps(k)}:{_emit(value[k])}" for k in sorted(value))
        return "{" + inner + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_emit(v) for v in value) + "]"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def export_scene(scene: Scene) -> bytes:
    """Serialize to canonical UTF-8 JSON (.scene.json)."""
    return _emit(_scene_to_document(scene)).encode("utf-8")


def scene_to_json_object(scene: Scene) -> dict[str, Any]:
    """The exported document as a parsed object (quantized like the bytes)."""
    return json.loads(export_scene(scene))


def quantize(scene: Scene) -> Scene:
    """The scene exactly as it survives export/import (6-decimal reals)."""
    return import_scene(export_scene(scene))


def _require(condition: bool, location: str, message: str) -> None:
    if not condition:
        raise SchemaViolationError(location, message)


def _as_real(value: Any, location: str) -> float:
    _require(
        isinstance(value, (int, float)) and not isinstance(value, bool),
        location,
        f"expected a number, got {value!r}",
    )
    result = float(value)
    _require(math.isfinite(result), location, "number must be finite")
    return result


def _as_int(value: Any, location: str) -> int:
    _require(
        isinstance(value, int) and not isinstance(value, bool),
        location,
        f"expected an integer, got {value!r}",
    )
    return value


def _as_str(value: Any, location: str) -> str:
    _require(isinstance(value, str), location, f"expected a string, got {value!r}")
    return value


def _as_bool(value: Any, location: str) -> bool:
    _require(isinstance(value, bool), location, f"expected a boolean, got {value!r}")
    return value


def _as_color(value: Any, location: str) -> RGBA:
    _require(isinstance(value, list) and len(value) == 4, location, "color must be [r,g,b,a]")
    channels = tuple(_as_real(c, location) for c in value)
    _require(all(0.0 <= c <= 1.0 for c in channels), location, "channels must be in [0, 1]")
    return channels


def _keys_exactly(obj: dict, expected: set[str], location: str) -> None:
    _require(isinstance(obj, dict), location, "expected an object")
    missing = expected - obj.keys()
    extra = obj.keys() - expected
    _require(not missing, location, f"missing keys {sorted(missing)}")
    _require(not extra, location, f"unexpected keys {sorted(extra)}")


def import_scene(data: bytes | str) -> Scene:
    """Parse and validate a scene document; every invariant is enforced."""
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaViolationError("$", f"not valid JSON: {exc}") from exc
    _keys_exactly(doc, {"version", "metadata", "nodes", "edges"}, "$")

    version = _as_int(doc["version"], "$.version")
    if version != SCENE_VERSION:
        raise BadVersionError(f"unsupported scene version {version}, expected {SCENE_VERSION}")

    meta = doc["metadata"]
    _keys_exactly(
        meta,
        {"layout_name", "source_file", "created", "node_count", "edge_count"},
        "$.metadata",
    )
    metadata = SceneMetadata(
        layout_name=_as_str(meta["layout_name"], "$.metadata.layout_name"),
        source_file=_as_str(meta["source_file"], "$.metadata.source_file"),
        created=_as_str(meta["created"], "$.metadata.created"),
        node_count=_as_int(meta["node_count"], "$.metadata.node_count"),
        edge_count=_as_int(meta["edge_count"], "$.metadata.edge_count"),
    )

    _require(isinstance(doc["nodes"], list), "$.nodes", "expected a list")
    nodes: list[SceneNode] = []
    ids: set[int] = set()
    for i, raw in enumerate(doc["nodes"]):
        loc = f"$.nodes[{i}]"
        _keys_exactly(
            raw,
            {"id", "label", "position", "color", "size", "is_seed", "is_highlighted"},
            loc,
        )
        node_id = _as_int(raw["id"], f"{loc}.id")
        _require(node_id >= 0, f"{loc}.id", "id must be non-negative")
        _require(node_id not in ids, f"{loc}.id", f"duplicate node id {node_id}")
        ids.add(node_id)
        pos_raw = raw["position"]
        _require(
            isinstance(pos_raw, list) and len(pos_raw) == 3,
            f"{loc}.position",
            "position must be [x,y,z]",
        )
        position = tuple(_as_real(c, f"{loc}.position") for c in pos_raw)
        size = _as_real(raw["size"], f"{loc}.size")
        _require(size > 0, f"{loc}.size", "size must be positive")
        nodes.append(
            SceneNode(
                id=node_id,
                label=_as_str(raw["label"], f"{loc}.label"),
                position=position,
                color=_as_color(raw["color"], f"{loc}.color"),
                size=size,
                is_seed=_as_bool(raw["is_seed"], f"{loc}.is_seed"),
                is_highlighted=_as_bool(raw["is_highlighted"], f"{loc}.is_highlighted"),
            )
        )

    _require(isinstance(doc["edges"], list), "$.edges", "expected a list")
    edges: list[SceneEdge] = []
    for i, raw in enumerate(doc["edges"]):
        loc = f"$.edges[{i}]"
        _keys_exactly(raw, {"source", "target", "color", "width", "is_highlighted"}, loc)
        source = _as_int(raw["source"], f"{loc}.source")
        target = _as_int(raw["target"], f"{loc}.target")
        for endpoint in (source, target):
            if endpoint not in ids:
                raise DanglingEdgeError(f"{loc}: edge endpoint {endpoint} is not a node id")
        width = _as_real(raw["width"], f"{loc}.width")
        _require(width > 0, f"{loc}.width", "width must be positive")
        edges.append(
            SceneEdge(
                source=source,
                target=target,
                color=_as_color(raw["color"], f"{loc}.color"),
                width=width,
                is_highlighted=_as_bool(raw["is_highlighted"], f"{loc}.is_highlighted"),
            )
        )

    _require(
        metadata.node_count == len(nodes),
        "$.metadata.node_count",
        f"declares {metadata.node_count} nodes but document has {len(nodes)}",
    )
    _require(
        metadata.edge_count == len(edges),
        "$.metadata.edge_count",
        f"declares {metadata.edge_count} edges but document has {len(edges)}",
    )
    return Scene(version=version, metadata=metadata, nodes=tuple(nodes), edges=tuple(edges))
