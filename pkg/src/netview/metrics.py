"""Per-node network parameters and pairwise shortest paths.

All metrics here use the hop metric (edge weights ignored): the
interactive path feature is breadth-first search, and the centralities
are defined over the same unit-length paths so the numbers shown for a
node agree with the paths drawn for it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import NoPathError, SameNodeError
from .graph import Graph


@dataclass(frozen=True)
class Path:
    """A simple hop-minimal path; length is the hop count."""

    nodes: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.nodes) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [
            (min(a, b), max(a, b)) for a, b in zip(self.nodes, self.nodes[1:])
        ]


@dataclass(frozen=True)
class NodeParams:
    degree: int
    closeness: float
    betweenness: float


def hop_distances(graph: Graph, source: int) -> list[int]:
    """BFS hop distance from source to every node, -1 when unreachable."""
    graph.check_node(source)
    dist = [-1] * graph.node_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u, _ in graph.adjacency[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def shortest_path(graph: Graph, source: int, target: int) -> Path:
    """Minimum-hop path from source to target via BFS.

    Neighbors are expanded in ascending id order, so among equally short
    paths the one discovered first is always the same.
    """
    graph.check_node(source)
    graph.check_node(target)
    if source == target:
        raise SameNodeError(f"source and target are both node {source}")
    parent = [-1] * graph.node_count
    parent[source] = source
    queue = deque([source])
    while queue:
        v = queue.popleft()
        if v == target:
            break
        for u, _ in graph.adjacency[v]:
            if parent[u] < 0:
                parent[u] = v
                queue.append(u)
    if parent[target] < 0:
        raise NoPathError(
            f"no path from {graph.labels[source]!r} to {graph.labels[target]!r}"
        )
    nodes = [target]
    while nodes[-1] != source:
        nodes.append(parent[nodes[-1]])
    return Path(nodes=tuple(reversed(nodes)))


def closeness_centrality(graph: Graph, v: int) -> float:
    """Component-scaled closeness: (r/S) * (r/(n-1)).

    r is the number of nodes reachable from v (v excluded) and S the sum
    of hop distances to them; isolated nodes get 0. The (n-1) scaling
    keeps values comparable across components of a disconnected graph.
    """
    dist = hop_distances(graph, v)
    reachable = [d for u, d in enumerate(dist) if u != v and d > 0]
    r = len(reachable)
    if r == 0:
        return 0.0
    total = sum(reachable)
    n = graph.node_count
    return (r / total) * (r / (n - 1))


@lru_cache(maxsize=16)
def _betweenness_vector(graph: Graph) -> tuple[float, ...]:
    # Brandes accumulation: one BFS per source, dependencies summed back
    # in reverse discovery order. Undirected, so raw deltas count each
    # pair twice; halved then scaled by (n-1)(n-2)/2.
    n = graph.node_count
    centrality = [0.0] * n
    if n < 3:
        return tuple(centrality)
    for s in range(n):
        order: list[int] = []
        preds: list[list[int]] = [[] for _ in range(n)]
        sigma = [0.0] * n
        sigma[s] = 1.0
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u, _ in graph.adjacency[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    queue.append(u)
                if dist[u] == dist[v] + 1:
                    sigma[u] += sigma[v]
                    preds[u].append(v)
        delta = [0.0] * n
        for v in reversed(order):
            for p in preds[v]:
                delta[p] += (sigma[p] / sigma[v]) * (1.0 + delta[v])
            if v != s:
                centrality[v] += delta[v]
    pair_scale = (n - 1) * (n - 2) / 2.0
    return tuple(c / 2.0 / pair_scale for c in centrality)


def betweenness_centrality(graph: Graph) -> dict[int, float]:
    """Normalized shortest-path betweenness for every node (hop metric).

    Each unordered pair is counted once and the result is divided by
    (n-1)(n-2)/2; graphs with fewer than 3 nodes get all zeros. Computed
    once per graph and cached.
    """
    return dict(enumerate(_betweenness_vector(graph)))


def node_params(graph: Graph, v: int) -> NodeParams:
    """Degree, closeness and betweenness bundle for one node."""
    graph.check_node(v)
    return NodeParams(
        degree=graph.degree(v),
        closeness=closeness_centrality(graph, v),
        betweenness=_betweenness_vector(graph)[v],
    )
