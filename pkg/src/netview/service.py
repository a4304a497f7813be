"""Local HTTP service exposing the engine to interactive viewers.

One in-memory session per uploaded network. Scene-returning endpoints
serve the canonical export bytes, so anything a client receives over the
wire validates against the scene importer. Mutating operations on a
session are serialized by a per-session lock; reads are lock-free.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from typing import Literal

from fastapi import FastAPI, HTTPException, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import layout as layout_mod
from . import metrics, subnet
from .errors import NetviewError, UnknownLabelError
from .graph import Graph, parse_edge_list, stats
from .scene import (
    DEFAULT_SCORE_PALETTE,
    Palette,
    Scene,
    VisualSettings,
    apply_highlight,
    apply_path_highlight,
    apply_subnet_emphasis,
    build_scene,
    export_scene,
    scene_to_json_object,
)

DEFAULT_PORT = 8077
PORT_ENV_VAR = "NETVIEW_PORT"

LAYOUT_ALGOS = {
    "force": layout_mod.FORCE_DIRECTED,
    "circular": layout_mod.CIRCULAR,
    "louvain-circular": layout_mod.LOUVAIN_CIRCULAR,
}

# errors that mean "that thing does not exist" rather than "cannot compute"
_NOT_FOUND = {"UnknownLabel", "InvalidNode"}


@dataclass
class Session:
    session_id: str
    graph: Graph
    source_name: str = ""
    settings: VisualSettings = field(default_factory=VisualSettings)
    palette: Palette = DEFAULT_SCORE_PALETTE
    layout: layout_mod.Layout | None = None
    base_scene: Scene | None = None
    scene: Scene | None = None
    # fixed at upload so identical layout requests return identical bytes
    created_at: str = field(
        default_factory=lambda: datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
    )
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    def __init__(self) -> None:
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self, graph: Graph, source_name: str = "") -> Session:
        session = Session(session_id=uuid.uuid4().hex, graph=graph, source_name=source_name)
        with self._lock:
            self._sessions[session.session_id] = session
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise HTTPException(404, detail={"error": "UnknownSession", "message": session_id})
        return session


def _module_error(err: NetviewError) -> HTTPException:
    status = 404 if err.name in _NOT_FOUND else 422
    return HTTPException(status, detail={"error": err.name, "message": str(err)})


def _need_layout(session: Session) -> Scene:
    if session.layout is None or session.base_scene is None:
        raise HTTPException(
            409, detail={"error": "NoLayout", "message": "compute a layout first"}
        )
    return session.base_scene


def _scene_response(scene: Scene) -> Response:
    return Response(content=export_scene(scene), media_type="application/json")


def _resolve_labels(graph: Graph, labels: list[str]) -> list[int]:
    unknown = [(label, i + 1) for i, label in enumerate(labels) if graph.id_of(label) is None]
    if unknown:
        raise UnknownLabelError(unknown)
    return [graph.id_of(label) for label in labels]


class NetworkRequest(BaseModel):
    text: str
    separator: Literal["auto", "comma", "tab", "whitespace"] = "auto"


class LayoutParamsModel(BaseModel):
    iterations: int | None = None
    box_side: float | None = None
    initial_temperature: float | None = None
    ideal_edge_length: float | None = None
    node_spacing: float | None = None
    circle_radius: float | None = None
    barycenter_sweeps: int | None = None
    louvain_resolution: float | None = None

    def to_params(self) -> layout_mod.LayoutParams:
        overrides = {k: v for k, v in self.model_dump().items() if v is not None}
        return replace(layout_mod.LayoutParams(), **overrides)


class LayoutRequest(BaseModel):
    algo: Literal["force", "circular", "louvain-circular"]
    params: LayoutParamsModel | None = None
    seed: int = 0


class HighlightRequest(BaseModel):
    node_id: int


class PathRequest(BaseModel):
    from_label: str
    to_label: str


class SubnetRequest(BaseModel):
    algo: Literal["apsp", "steiner", "rwr"]
    seed_labels: list[str]
    iterations: int = 100
    restart_prob: float = 0.15
    palette: list[tuple[float, tuple[float, float, float, float]]] | None = None


class SettingsRequest(BaseModel):
    base_node_size: float | None = None
    size_by_degree: bool | None = None
    color_by_degree: bool | None = None
    label_font_size: float | None = None
    default_node_color: tuple[float, float, float, float] | None = None
    default_edge_color: tuple[float, float, float, float] | None = None
    highlight_node_color: tuple[float, float, float, float] | None = None
    highlight_edge_color: tuple[float, float, float, float] | None = None
    edge_width: float | None = None


def compute_layout(graph: Graph, algo: str, params: layout_mod.LayoutParams, seed: int):
    internal = LAYOUT_ALGOS[algo]
    if internal == layout_mod.FORCE_DIRECTED:
        return layout_mod.force_directed_3d(graph, params, rng_seed=seed)
    if internal == layout_mod.CIRCULAR:
        return layout_mod.circular_barycenter(graph, params)
    return layout_mod.clustered_circular(graph, params)


def run_subnet(graph: Graph, algo: str, seeds: list[int], iterations: int, restart_prob: float):
    if algo == "apsp":
        return subnet.apsp_subnetwork(graph, seeds)
    if algo == "steiner":
        return subnet.steiner_tree(graph, seeds)
    return subnet.random_walk_scores(graph, seeds, iterations, restart_prob)


def subnet_scene(
    base: Scene,
    result: subnet.SubnetResult,
    palette: Palette,
    algo: str,
) -> Scene:
    node_colors = None
    if algo == "rwr" and result.scores is not None:
        member_scores = {v: result.scores[v] for v in result.sorted_nodes()}
        node_colors = subnet.scores_to_colors(member_scores, palette)
    seeds = [v for v, is_seed in result.seed_flags.items() if is_seed]
    return apply_subnet_emphasis(
        base,
        result.sorted_nodes(),
        result.sorted_edges(),
        seeds=seeds,
        node_colors=node_colors,
    )


def subnet_summary(result: subnet.SubnetResult) -> dict:
    return {
        "nodes": result.sorted_nodes(),
        "edges": [list(e) for e in result.sorted_edges()],
        "seed_ids": sorted(v for v, s in result.seed_flags.items() if s),
        "total_weight": result.total_weight,
        "scores": (
            {str(v): result.scores[v] for v in sorted(result.scores)}
            if result.scores is not None
            else None
        ),
        "unreachable_pairs": [list(p) for p in result.unreachable_pairs],
        "warning": result.warning,
    }


def create_app(store: SessionStore | None = None) -> FastAPI:
    store = store if store is not None else SessionStore()
    app = FastAPI(title="netview", version="0.1.0")
    app.state.store = store
    app.add_middleware(
        CORSMiddleware,
        allow_origin_regex=r"https?://(localhost|127\.0\.0\.1)(:\d+)?",
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def malformed_request(request: Request, exc: RequestValidationError):
        # request-shape problems are the client's schema bug, not ours
        return JSONResponse(
            status_code=400,
            content={"detail": {"error": "SchemaViolation", "message": str(exc.errors())}},
        )

    @app.exception_handler(NetviewError)
    async def module_error(request: Request, exc: NetviewError):
        http = _module_error(exc)
        return JSONResponse(status_code=http.status_code, content={"detail": http.detail})

    @app.post("/network")
    def upload_network(body: NetworkRequest):
        graph, report = parse_edge_list(body.text, body.separator)
        session = store.create(graph, source_name="upload")
        return {
            "session_id": session.session_id,
            "node_count": graph.node_count,
            "edge_count": graph.edge_count,
            "report": {
                "node_count": report.node_count,
                "edge_count": report.edge_count,
                "duplicate_lines_dropped": report.duplicate_lines_dropped,
                "self_loops_dropped": report.self_loops_dropped,
                "malformed_lines": [list(entry) for entry in report.malformed_lines],
            },
        }

    @app.get("/session/{session_id}/stats")
    def session_stats(session_id: str):
        session = store.get(session_id)
        return stats(session.graph)

    @app.post("/session/{session_id}/layout")
    def session_layout(session_id: str, body: LayoutRequest):
        session = store.get(session_id)
        params = (body.params or LayoutParamsModel()).to_params()
        with session.lock:
            session.layout = compute_layout(session.graph, body.algo, params, body.seed)
            session.base_scene = build_scene(
                session.graph,
                session.layout,
                session.settings,
                source_file=session.source_name,
                created=session.created_at,
            )
            session.scene = session.base_scene
            return _scene_response(session.scene)

    @app.get("/session/{session_id}/node/{node_id}/params")
    def node_parameters(session_id: str, node_id: int):
        session = store.get(session_id)
        params = metrics.node_params(session.graph, node_id)
        return {
            "degree": params.degree,
            "closeness": params.closeness,
            "betweenness": params.betweenness,
            "neighbors": session.graph.neighbors(node_id),
        }

    @app.post("/session/{session_id}/highlight")
    def highlight(session_id: str, body: HighlightRequest):
        session = store.get(session_id)
        with session.lock:
            base = _need_layout(session)
            session.scene = apply_highlight(
                base, body.node_id, session.graph, session.settings
            )
            return _scene_response(session.scene)

    @app.post("/session/{session_id}/path")
    def find_path(session_id: str, body: PathRequest):
        session = store.get(session_id)
        with session.lock:
            base = _need_layout(session)
            source, target = _resolve_labels(
                session.graph, [body.from_label, body.to_label]
            )
            path = metrics.shortest_path(session.graph, source, target)
            session.scene = apply_path_highlight(base, path, session.settings)
            return {
                "path": [session.graph.labels[v] for v in path.nodes],
                "scene": scene_to_json_object(session.scene),
            }

    @app.post("/session/{session_id}/subnet")
    def find_subnet(session_id: str, body: SubnetRequest):
        session = store.get(session_id)
        with session.lock:
            base = _need_layout(session)
            seeds = _resolve_labels(session.graph, body.seed_labels)
            result = run_subnet(
                session.graph, body.algo, seeds, body.iterations, body.restart_prob
            )
            palette = (
                Palette(stops=tuple(body.palette)) if body.palette else session.palette
            )
            session.scene = subnet_scene(base, result, palette, body.algo)
            return {
                "result": subnet_summary(result),
                "scene": scene_to_json_object(session.scene),
            }

    @app.get("/session/{session_id}/scene")
    def current_scene(session_id: str):
        session = store.get(session_id)
        if session.scene is None:
            raise HTTPException(
                409, detail={"error": "NoLayout", "message": "compute a layout first"}
            )
        return _scene_response(session.scene)

    @app.put("/session/{session_id}/settings")
    def update_settings(session_id: str, body: SettingsRequest):
        session = store.get(session_id)
        with session.lock:
            _need_layout(session)
            overrides = {
                k: v for k, v in body.model_dump().items() if v is not None
            }
            try:
                session.settings = replace(session.settings, **overrides)
            except ValueError as exc:
                raise HTTPException(
                    400, detail={"error": "SchemaViolation", "message": str(exc)}
                ) from exc
            session.base_scene = build_scene(
                session.graph,
                session.layout,
                session.settings,
                source_file=session.source_name,
                created=session.created_at,
            )
            session.scene = session.base_scene
            return _scene_response(session.scene)

    return app
