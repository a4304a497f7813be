"""Subnetwork identification from seed nodes.

Three routes to a subnetwork: union of pairwise shortest paths, a Kou
approximate Steiner tree, and expected-mass random walk with restart.
All are deterministic; shortest-path ties always resolve toward the
smaller intermediate node id.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import (
    EmptySeedSetError,
    NegativeIterationsError,
    EmptyScoresError,
    SeedsDisconnectedError,
    TooFewSeedsError,
)
from .graph import Graph
from .scene import RGBA, Palette

APSP = "apsp"
STEINER = "steiner"
RWR = "rwr"


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs weighted shortest distances with path reconstruction.

    dist[i][j] is inf when j is unreachable from i; next_hop[i][j] is the
    node after i on the chosen i->j path, -1 when there is none.
    """

    dist: np.ndarray
    next_hop: np.ndarray

    def path(self, source: int, target: int) -> list[int] | None:
        if source == target:
            return [source]
        if self.next_hop[source, target] < 0:
            return None
        nodes = [source]
        while nodes[-1] != target:
            nodes.append(int(self.next_hop[nodes[-1], target]))
        return nodes


@dataclass(frozen=True)
class SubnetResult:
    nodes: frozenset[int]
    edges: frozenset[tuple[int, int]]  # (u, v) with u < v
    seed_flags: dict[int, bool]
    total_weight: float
    scores: dict[int, float] | None = None
    unreachable_pairs: tuple[tuple[int, int], ...] = ()
    warning: str | None = None

    def sorted_nodes(self) -> list[int]:
        return sorted(self.nodes)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class WalkState:
    scores: dict[int, float]
    iteration: int
    restart_prob: float
    seeds: tuple[int, ...]


def floyd_warshall(graph: Graph) -> DistanceMatrix:
    """Exact all-pairs shortest distances by k-relaxation.

    Intermediate vertices are tried in ascending id order with strict
    improvement only, so among equally short paths the one through the
    smallest intermediate id is kept.
    """
    n = graph.node_count
    dist = np.full((n, n), np.inf)
    np.fill_diagonal(dist, 0.0)
    next_hop = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(next_hop, np.arange(n))
    for u, v, w in graph.edges():
        dist[u, v] = dist[v, u] = w
        next_hop[u, v] = v
        next_hop[v, u] = u
    for k in range(n):
        through_k = dist[:, k][:, None] + dist[k, :][None, :]
        better = through_k < dist
        dist = np.where(better, through_k, dist)
        next_hop = np.where(better, next_hop[:, k][:, None], next_hop)
    return DistanceMatrix(dist=dist, next_hop=next_hop)


def _seed_list(graph: Graph, seeds: list[int]) -> list[int]:
    ordered: list[int] = []
    seen: set[int] = set()
    for s in seeds:
        graph.check_node(s)
        if s not in seen:
            seen.add(s)
            ordered.append(s)
    if not ordered:
        raise EmptySeedSetError("no seed nodes given")
    return ordered


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _result(
    graph: Graph,
    nodes: set[int],
    edges: set[tuple[int, int]],
    seeds: list[int],
    scores: dict[int, float] | None = None,
    unreachable: tuple[tuple[int, int], ...] = (),
    warning: str | None = None,
) -> SubnetResult:
    seed_set = set(seeds)
    total = sum(graph.edge_weight(u, v) for u, v in edges)
    return SubnetResult(
        nodes=frozenset(nodes),
        edges=frozenset(edges),
        seed_flags={v: v in seed_set for v in sorted(nodes)},
        total_weight=total,
        scores=scores,
        unreachable_pairs=unreachable,
        warning=warning,
    )


def apsp_subnetwork(graph: Graph, seeds: list[int]) -> SubnetResult:
    """Union of one reconstructed shortest path per reachable seed pair.

    Non-seed nodes along those paths become part of the subnetwork. Seed
    pairs split across components are skipped and reported in
    ``unreachable_pairs``; if no pair connects at all, the result carries
    the AllSeedsIsolated warning and just the seeds.
    """
    seeds = _seed_list(graph, seeds)
    nodes: set[int] = set(seeds)
    edges: set[tuple[int, int]] = set()
    if len(seeds) == 1:
        return _result(graph, nodes, edges, seeds)
    dm = floyd_warshall(graph)
    unreachable: list[tuple[int, int]] = []
    for s, t in itertools.combinations(sorted(seeds), 2):
        if not np.isfinite(dm.dist[s, t]):
            unreachable.append((s, t))
            continue
        path = dm.path(s, t)
        nodes.update(path)
        edges.update(_edge_key(a, b) for a, b in zip(path, path[1:]))
    warning = None
    if len(unreachable) == len(seeds) * (len(seeds) - 1) // 2:
        warning = "AllSeedsIsolated"
    return _result(
        graph, nodes, edges, seeds, unreachable=tuple(unreachable), warning=warning
    )


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def kruskal_mst(graph: Graph) -> frozenset[tuple[int, int]]:
    """Minimum spanning forest edges, one tree per component.

    Candidate edges are taken in (weight, smaller id, larger id) order, so
    equal-weight ties always resolve the same way.
    """
    ranked = sorted((w, u, v) for u, v, w in graph.edges())
    uf = _UnionFind(graph.node_count)
    chosen: set[tuple[int, int]] = set()
    for w, u, v in ranked:
        if uf.union(u, v):
            chosen.add((u, v))
    return frozenset(chosen)


def _graph_from_edges(
    node_ids: list[int],
    weighted_edges: list[tuple[int, int, float]],
    labels: tuple[str, ...],
) -> tuple[Graph, dict[int, int]]:
    # standalone graph over the given original ids, densely relabeled
    members = sorted(node_ids)
    remap = {old: new for new, old in enumerate(members)}
    adjacency: list[list[tuple[int, float]]] = [[] for _ in members]
    for u, v, w in weighted_edges:
        adjacency[remap[u]].append((remap[v], w))
        adjacency[remap[v]].append((remap[u], w))
    sub = Graph(
        labels=tuple(labels[v] for v in members),
        adjacency=tuple(tuple(sorted(nbrs)) for nbrs in adjacency),
        edge_count=len(weighted_edges),
    )
    return sub, remap


def _prune_non_seed_leaves(
    edges: set[tuple[int, int]], seeds: set[int]
) -> tuple[set[int], set[tuple[int, int]]]:
    adjacency: dict[int, set[int]] = {}
    for u, v in edges:
        adjacency.setdefault(u, set()).add(v)
        adjacency.setdefault(v, set()).add(u)
    leaves = [v for v, nbrs in adjacency.items() if len(nbrs) <= 1 and v not in seeds]
    while leaves:
        v = leaves.pop()
        nbrs = adjacency.pop(v, set())
        for u in nbrs:
            adjacency[u].discard(v)
            if len(adjacency[u]) <= 1 and u not in seeds:
                leaves.append(u)
    kept_nodes = set(adjacency) | seeds
    kept_edges = {_edge_key(u, v) for u, nbrs in adjacency.items() for v in nbrs}
    return kept_nodes, kept_edges


def steiner_tree(graph: Graph, seeds: list[int], method: str = "kou") -> SubnetResult:
    """Approximate Steiner tree over the seed set.

    method="kou" runs the full five-step construction: metric closure on
    the seeds, MST of the closure, expansion of closure edges into their
    underlying shortest paths, MST of that expanded subgraph, and
    iterative deletion of non-seed leaves. method="mst-prune" is the
    cruder variant for comparison: spanning-forest of the whole graph,
    then the same leaf pruning.
    """
    if method not in ("kou", "mst-prune"):
        raise ValueError(f"method must be 'kou' or 'mst-prune', got {method!r}")
    seeds = _seed_list(graph, seeds)
    if len(seeds) < 2:
        raise TooFewSeedsError(f"need at least 2 distinct seeds, got {len(seeds)}")
    seed_set = set(seeds)
    dm = floyd_warshall(graph)
    split = [
        (s, t)
        for s, t in itertools.combinations(sorted(seeds), 2)
        if not np.isfinite(dm.dist[s, t])
    ]
    if split:
        raise SeedsDisconnectedError(split)

    if method == "mst-prune":
        forest = kruskal_mst(graph)
        _, edges = _prune_non_seed_leaves(set(forest), seed_set)
    else:
        # metric closure over the seeds, weighted by host-graph distances
        ordered = sorted(seeds)
        closure_edges = [
            (s, t, float(dm.dist[s, t]))
            for s, t in itertools.combinations(ordered, 2)
        ]
        closure, closure_map = _graph_from_edges(ordered, closure_edges, graph.labels)
        closure_mst = kruskal_mst(closure)
        back = {new: old for old, new in closure_map.items()}

        expanded_nodes: set[int] = set()
        expanded_edges: set[tuple[int, int]] = set()
        for a, b in sorted(closure_mst):
            path = dm.path(back[a], back[b])
            expanded_nodes.update(path)
            expanded_edges.update(_edge_key(u, v) for u, v in zip(path, path[1:]))
        weighted = [
            (u, v, graph.edge_weight(u, v)) for u, v in sorted(expanded_edges)
        ]
        expanded, expanded_map = _graph_from_edges(
            sorted(expanded_nodes), weighted, graph.labels
        )
        to_original = {new: old for old, new in expanded_map.items()}
        tree_edges = {
            _edge_key(to_original[u], to_original[v])
            for u, v in kruskal_mst(expanded)
        }
        _, edges = _prune_non_seed_leaves(tree_edges, seed_set)

    nodes = {v for edge in edges for v in edge} | seed_set
    return _result(graph, nodes, edges, seeds)


def walk_states(
    graph: Graph,
    seeds: list[int],
    iterations: int,
    restart_prob: float = 0.15,
):
    """Yield the walk state after each synchronous expected-mass update.

    Update rule: each node passes (1 - restart) of its mass in equal
    shares to its neighbors, the restart fraction flows back to the
    uniform seed distribution, and mass stranded on isolated nodes is
    redirected to the seeds. Total mass stays 1 at every step.
    """
    seeds = _seed_list(graph, seeds)
    if iterations < 0:
        raise NegativeIterationsError(f"iterations must be >= 0, got {iterations}")
    if not 0.0 <= restart_prob < 1.0:
        raise ValueError(f"restart_prob must be in [0, 1), got {restart_prob}")
    n = graph.node_count
    p0 = [0.0] * n
    for s in seeds:
        p0[s] = 1.0 / len(seeds)
    state = list(p0)
    seed_tuple = tuple(seeds)
    yield WalkState(dict(enumerate(state)), 0, restart_prob, seed_tuple)
    keep = 1.0 - restart_prob
    for step in range(1, iterations + 1):
        incoming = [restart_prob * p0[v] for v in range(n)]
        stranded = 0.0
        for v in range(n):
            mass = state[v]
            if mass == 0.0:
                continue
            nbrs = graph.adjacency[v]
            if not nbrs:
                stranded += mass
                continue
            share = keep * mass / len(nbrs)
            for u, _ in nbrs:
                incoming[u] += share
        if stranded > 0.0:
            for v in seeds:
                incoming[v] += keep * stranded * p0[v]
        state = incoming
        yield WalkState(dict(enumerate(state)), step, restart_prob, seed_tuple)


def random_walk_scores(
    graph: Graph,
    seeds: list[int],
    iterations: int,
    restart_prob: float = 0.15,
    threshold: float = 0.0,
) -> SubnetResult:
    """Run the walk and collect the touched subnetwork with node scores.

    The score of a node is its signal mass after exactly ``iterations``
    updates. Members are the nodes scoring above ``threshold`` plus the
    seeds; member edges are the induced ones.
    """
    final: WalkState | None = None
    for final in walk_states(graph, seeds, iterations, restart_prob):
        pass
    assert final is not None
    scores = final.scores
    members = {v for v, s in scores.items() if s > threshold} | set(final.seeds)
    edges = {
        _edge_key(u, v)
        for u in sorted(members)
        for v, _ in graph.adjacency[u]
        if v in members and u < v
    }
    return _result(graph, members, edges, list(final.seeds), scores=scores)


def scores_to_colors(
    scores: dict[int, float], palette: Palette
) -> dict[int, RGBA]:
    """Min-max normalize scores and read each through the gradient.

    A flat score vector maps everything to the palette midpoint.
    """
    if not scores:
        raise EmptyScoresError("no scores to color")
    palette.validate()
    values = list(scores.values())
    lo, hi = min(values), max(values)
    colors: dict[int, RGBA] = {}
    for v in sorted(scores):
        t = 0.5 if hi == lo else (scores[v] - lo) / (hi - lo)
        colors[v] = palette.color_at(t)
    return colors
