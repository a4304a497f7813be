"""3D node placement: force-directed, circular barycenter, Louvain-clustered.

All layouts are deterministic functions of (graph, params, rng_seed). The
force-directed layout runs synchronous updates (forces always read the
previous iteration's positions), so results do not depend on evaluation
order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from .errors import NoEdgesError
from .graph import Graph, induced_subgraph

FORCE_DIRECTED = "force_directed"
CIRCULAR = "circular"
LOUVAIN_CIRCULAR = "louvain_circular"

_COINCIDENT = 1e-9


@dataclass(frozen=True)
class LayoutParams:
    """Layout knobs; None means "derive from the graph at run time"."""

    iterations: int = 200
    box_side: float = 10.0
    initial_temperature: float | None = None  # None -> box_side / 10
    ideal_edge_length: float | None = None  # None -> (box_side^3 / n) ^ (1/3)
    node_spacing: float = 1.0
    circle_radius: float | None = None  # None -> max(1, n * spacing / (2 pi))
    barycenter_sweeps: int = 10
    louvain_resolution: float = 1.0

    def temperature0(self) -> float:
        if self.initial_temperature is not None:
            return self.initial_temperature
        return self.box_side / 10.0

    def edge_length(self, n: int) -> float:
        if self.ideal_edge_length is not None:
            return self.ideal_edge_length
        return (self.box_side**3 / max(n, 1)) ** (1.0 / 3.0)

    def radius(self, n: int) -> float:
        if self.circle_radius is not None:
            return self.circle_radius
        return max(1.0, n * self.node_spacing / (2.0 * math.pi))


@dataclass(frozen=True)
class Layout:
    positions: dict[int, tuple[float, float, float]]
    algorithm: str
    params: LayoutParams
    rng_seed: int = 0


@dataclass(frozen=True)
class CommunityAssignment:
    community: dict[int, int]  # node id -> dense community id
    modularity_q: float
    pass_modularities: tuple[float, ...] = field(default=())

    @property
    def community_count(self) -> int:
        return len(set(self.community.values()))


def _separate_coincident(pos: np.ndarray, rng: np.random.Generator, scale: float) -> None:
    # Random jitter keeps the force denominators away from zero; a few
    # retries suffice since repeated collisions have measure zero.
    n = len(pos)
    for _ in range(10):
        delta = pos[:, None, :] - pos[None, :, :]
        dist = np.sqrt((delta**2).sum(axis=2))
        np.fill_diagonal(dist, np.inf)
        hit = np.unique(np.nonzero(dist < _COINCIDENT)[0])
        if hit.size == 0:
            return
        pos[hit] += rng.uniform(-scale, scale, (hit.size, 3))


def force_directed_3d(
    graph: Graph,
    params: LayoutParams | None = None,
    rng_seed: int = 0,
    instrument: Callable[[int, float, np.ndarray], None] | None = None,
) -> Layout:
    """Fruchterman-Reingold push-pull layout generalized to a 3D box.

    Nodes start at seeded random positions inside the box. Every pair
    repels with magnitude k^2/d, every edge attracts with d^2/k, each
    node's move is capped at the current temperature, and the temperature
    cools linearly to zero over the iteration budget.
    """
    params = params or LayoutParams()
    n = graph.node_count
    positions: dict[int, tuple[float, float, float]] = {}
    if n == 0:
        return Layout(positions, FORCE_DIRECTED, params, rng_seed)

    half = params.box_side / 2.0
    k = params.edge_length(n)
    t0 = params.temperature0()
    rng = np.random.default_rng(rng_seed)
    pos = rng.uniform(-half, half, (n, 3))

    edge_list = list(graph.edges())
    eu = np.array([u for u, _, _ in edge_list], dtype=np.intp)
    ev = np.array([v for _, v, _ in edge_list], dtype=np.intp)

    iterations = params.iterations
    for it in range(iterations):
        temperature = t0 * (1.0 - it / iterations)
        _separate_coincident(pos, rng, 1e-6 * k)

        delta = pos[:, None, :] - pos[None, :, :]
        dist = np.sqrt((delta**2).sum(axis=2))
        np.fill_diagonal(dist, 1.0)
        repulsion = k * k / (dist * dist)
        np.fill_diagonal(repulsion, 0.0)
        disp = (delta * repulsion[:, :, None]).sum(axis=1)

        if len(edge_list) > 0:
            dvec = pos[eu] - pos[ev]
            dd = np.sqrt((dvec**2).sum(axis=1))
            pull = dvec * (dd / k)[:, None]
            np.subtract.at(disp, eu, pull)
            np.add.at(disp, ev, pull)

        lengths = np.sqrt((disp**2).sum(axis=1))
        scale = np.where(
            lengths > 0.0,
            np.minimum(lengths, temperature) / np.maximum(lengths, 1e-300),
            0.0,
        )
        step = disp * scale[:, None]
        pos += step
        if instrument is not None:
            instrument(it, temperature, np.sqrt((step**2).sum(axis=1)))

    if not np.isfinite(pos).all():
        raise FloatingPointError("force-directed layout produced non-finite coordinates")
    for v in range(n):
        positions[v] = (float(pos[v, 0]), float(pos[v, 1]), float(pos[v, 2]))
    return Layout(positions, FORCE_DIRECTED, params, rng_seed)


def _circular_mean(angles: list[float]) -> float:
    s = sum(math.sin(a) for a in angles)
    c = sum(math.cos(a) for a in angles)
    return math.atan2(s, c) % (2.0 * math.pi)


def _barycenter_order(graph: Graph, sweeps: int) -> list[int]:
    """Circular ordering after the barycenter sweeps (or a fixed point).

    Nodes are visited sequentially in their current circular order and
    jump to the circular mean of their neighbors' current angles right
    away; a simultaneous update oscillates on cycles instead of settling.
    After each pass the nodes are stable-sorted by angle and re-spaced
    uniformly.
    """
    n = graph.node_count
    order = list(range(n))
    angle = [2.0 * math.pi * j / n for j in range(n)]
    for _ in range(sweeps):
        bary = list(angle)
        for v in order:
            nbrs = graph.neighbors(v)
            if nbrs:
                bary[v] = _circular_mean([bary[u] for u in nbrs])
        new_order = sorted(order, key=lambda v: bary[v])  # stable: ties keep order
        if new_order == order:
            break
        order = new_order
        for j, v in enumerate(order):
            angle[v] = 2.0 * math.pi * j / n
    return order


def circular_barycenter(graph: Graph, params: LayoutParams | None = None) -> Layout:
    """Single circle in the z=0 plane, ordered by the barycenter heuristic.

    Starting from id order, each sweep moves every node to the circular
    mean angle of its neighbors, re-sorts, and re-spaces uniformly, which
    pulls connected nodes next to each other instead of leaving them
    scattered around the circle.
    """
    params = params or LayoutParams()
    n = graph.node_count
    positions: dict[int, tuple[float, float, float]] = {}
    if n == 0:
        return Layout(positions, CIRCULAR, params, 0)
    radius = params.radius(n)
    order = _barycenter_order(graph, params.barycenter_sweeps)
    for j, v in enumerate(order):
        theta = 2.0 * math.pi * j / n
        positions[v] = (radius * math.cos(theta), radius * math.sin(theta), 0.0)
    positions = {v: positions[v] for v in range(n)}
    return Layout(positions, CIRCULAR, params, 0)


def _level_modularity(
    adj: list[dict[int, float]],
    loops: list[float],
    comm: list[int],
    m: float,
    resolution: float,
) -> float:
    inside: dict[int, float] = {}
    tot: dict[int, float] = {}
    for u in range(len(adj)):
        c = comm[u]
        k_u = sum(adj[u].values()) + 2.0 * loops[u]
        tot[c] = tot.get(c, 0.0) + k_u
        inside[c] = inside.get(c, 0.0) + loops[u]
        for v, w in adj[u].items():
            if comm[v] == c and u < v:
                inside[c] = inside.get(c, 0.0) + w
    return sum(
        inside.get(c, 0.0) / m - resolution * (tot[c] / (2.0 * m)) ** 2
        for c in tot
    )


def _local_move(
    adj: list[dict[int, float]],
    loops: list[float],
    m: float,
    resolution: float,
) -> tuple[list[int], bool]:
    """One Louvain phase: greedy single-node moves in ascending id order."""
    n = len(adj)
    k = [sum(adj[v].values()) + 2.0 * loops[v] for v in range(n)]
    comm = list(range(n))
    tot = list(k)
    two_m_sq = 2.0 * m * m
    moved_any = False
    while True:
        moved = False
        for v in range(n):
            cv = comm[v]
            weight_to: dict[int, float] = {}
            for u, w in adj[v].items():
                cu = comm[u]
                weight_to[cu] = weight_to.get(cu, 0.0) + w
            tot[cv] -= k[v]
            stay = weight_to.get(cv, 0.0) / m - resolution * k[v] * tot[cv] / two_m_sq
            best_gain = 0.0
            best_c = cv
            for c in sorted(weight_to):
                if c == cv:
                    continue
                gain = (
                    weight_to[c] / m
                    - resolution * k[v] * tot[c] / two_m_sq
                    - stay
                )
                # strict > keeps the smallest community id on equal gain
                if gain > best_gain + 1e-12:
                    best_gain = gain
                    best_c = c
            comm[v] = best_c
            tot[best_c] += k[v]
            if best_c != cv:
                moved = True
                moved_any = True
        if not moved:
            return comm, moved_any


def _aggregate(
    adj: list[dict[int, float]],
    loops: list[float],
    comm: list[int],
    groups: list[list[int]],
) -> tuple[list[dict[int, float]], list[float], list[list[int]]]:
    relabel = {c: i for i, c in enumerate(sorted(set(comm)))}
    size = len(relabel)
    new_adj: list[dict[int, float]] = [{} for _ in range(size)]
    new_loops = [0.0] * size
    new_groups: list[list[int]] = [[] for _ in range(size)]
    for u in range(len(adj)):
        cu = relabel[comm[u]]
        new_loops[cu] += loops[u]
        new_groups[cu].extend(groups[u])
        for v, w in adj[u].items():
            if u < v:
                cv = relabel[comm[v]]
                if cu == cv:
                    new_loops[cu] += w
                else:
                    new_adj[cu][cv] = new_adj[cu].get(cv, 0.0) + w
                    new_adj[cv][cu] = new_adj[cv].get(cu, 0.0) + w
    return new_adj, new_loops, new_groups


def modularity(graph: Graph, community: dict[int, int], resolution: float = 1.0) -> float:
    """Q of a partition: intra-edge mass against the degree-preserving null."""
    m = sum(w for _, _, w in graph.edges())
    if m <= 0:
        raise NoEdgesError("modularity undefined on a graph with no edges")
    inside: dict[int, float] = {}
    tot: dict[int, float] = {}
    for v in range(graph.node_count):
        c = community[v]
        tot[c] = tot.get(c, 0.0) + sum(w for _, w in graph.adjacency[v])
        inside.setdefault(c, 0.0)
    for u, v, w in graph.edges():
        if community[u] == community[v]:
            inside[community[u]] += w
    return sum(
        inside[c] / m - resolution * (tot[c] / (2.0 * m)) ** 2 for c in tot
    )


def louvain_communities(graph: Graph, resolution: float = 1.0) -> CommunityAssignment:
    """Two-phase Louvain with a fixed (ascending id) visit order.

    Local moving repeats until no single-node move improves Q, then the
    communities are aggregated into one node each; passes repeat until the
    Q gain drops below 1e-9. Deterministic by construction: no shuffling,
    equal-gain ties go to the smallest community id.
    """
    if graph.edge_count == 0:
        raise NoEdgesError("community detection needs at least one edge")
    n = graph.node_count
    adj: list[dict[int, float]] = [{} for _ in range(n)]
    for u, v, w in graph.edges():
        adj[u][v] = w
        adj[v][u] = w
    loops = [0.0] * n
    groups: list[list[int]] = [[v] for v in range(n)]
    m = sum(w for _, _, w in graph.edges())

    passes: list[float] = [_level_modularity(adj, loops, list(range(n)), m, resolution)]
    while True:
        comm, moved_any = _local_move(adj, loops, m, resolution)
        q = _level_modularity(adj, loops, comm, m, resolution)
        if not moved_any:
            break
        passes.append(q)
        adj, loops, groups = _aggregate(adj, loops, comm, groups)
        if len(passes) >= 2 and passes[-1] - passes[-2] < 1e-9:
            break

    # dense community ids ordered by smallest original member
    groups_sorted = sorted(groups, key=min)
    community: dict[int, int] = {}
    for cid, members in enumerate(groups_sorted):
        for v in members:
            community[v] = cid
    return CommunityAssignment(
        community=community,
        modularity_q=passes[-1],
        pass_modularities=tuple(passes),
    )


def clustered_circular(graph: Graph, params: LayoutParams | None = None) -> Layout:
    """Louvain communities, each laid out as its own barycenter circle.

    Community centers sit uniformly on a meta-circle; every member circle
    is scaled to its community size. Planar (z = 0) like the single
    circular layout.
    """
    params = params or LayoutParams()
    assignment = louvain_communities(graph, params.louvain_resolution)
    count = assignment.community_count
    base_radius = params.radius(graph.node_count)
    meta_radius = max(2.0 * base_radius, count * base_radius)

    members_by_community: dict[int, list[int]] = {}
    for v, c in assignment.community.items():
        members_by_community.setdefault(c, []).append(v)

    positions: dict[int, tuple[float, float, float]] = {}
    for c in range(count):
        members = sorted(members_by_community[c])
        theta = 2.0 * math.pi * c / count
        cx = meta_radius * math.cos(theta)
        cy = meta_radius * math.sin(theta)
        sub, remap = induced_subgraph(graph, members)
        sub_params = replace(params, circle_radius=None)
        sub_layout = circular_barycenter(sub, sub_params)
        back = {new: old for old, new in remap.items()}
        for new_id, (x, y, z) in sub_layout.positions.items():
            positions[back[new_id]] = (cx + x, cy + y, z)
    positions = {v: positions[v] for v in range(graph.node_count)}
    return Layout(positions, LOUVAIN_CIRCULAR, params, 0)
