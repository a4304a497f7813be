"""Edge-list parsing and the immutable undirected graph structure.

Node ids are dense integers assigned in first-appearance order of the
labels in the input file, so the same file always produces the same graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

from .errors import (
    AllLinesMalformedError,
    EmptyInputError,
    EmptySeedSetError,
    InvalidNodeError,
    UnknownLabelError,
)

SEPARATORS = ("auto", "comma", "tab", "whitespace")


@dataclass(frozen=True)
class Graph:
    """Immutable undirected weighted graph.

    ``adjacency[v]`` is a tuple of ``(neighbor, weight)`` pairs sorted by
    neighbor id. Simple graph: no self-loops, no parallel edges, all
    weights positive.
    """

    labels: tuple[str, ...]
    adjacency: tuple[tuple[tuple[int, float], ...], ...]
    edge_count: int
    _label_index: dict[str, int] = field(
        init=False, repr=False, compare=False, default_factory=dict
    )

    def __post_init__(self):
        index = {label: i for i, label in enumerate(self.labels)}
        object.__setattr__(self, "_label_index", index)

    @property
    def node_count(self) -> int:
        return len(self.labels)

    def has_node(self, v: int) -> bool:
        return 0 <= v < len(self.labels)

    def check_node(self, v: int) -> None:
        if not isinstance(v, int) or isinstance(v, bool) or not self.has_node(v):
            raise InvalidNodeError(v)

    def label(self, v: int) -> str:
        self.check_node(v)
        return self.labels[v]

    def id_of(self, label: str) -> int | None:
        return self._label_index.get(label)

    def neighbors(self, v: int) -> list[int]:
        self.check_node(v)
        return [u for u, _ in self.adjacency[v]]

    def neighbor_weights(self, v: int) -> tuple[tuple[int, float], ...]:
        self.check_node(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        self.check_node(v)
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        self.check_node(u)
        self.check_node(v)
        return any(w == v for w, _ in self.adjacency[u])

    def edge_weight(self, u: int, v: int) -> float:
        self.check_node(u)
        self.check_node(v)
        for w, weight in self.adjacency[u]:
            if w == v:
                return weight
        raise KeyError(f"no edge ({u}, {v})")

    def edges(self) -> Iterator[tuple[int, int, float]]:
        """Yield each undirected edge once as (u, v, weight) with u < v."""
        for u, nbrs in enumerate(self.adjacency):
            for v, w in nbrs:
                if u < v:
                    yield u, v, w

    def to_edge_list_text(self, separator: str = ",") -> str:
        """Serialize back to one `label<sep>label<sep>weight` line per edge."""
        lines = [
            f"{self.labels[u]}{separator}{self.labels[v]}{separator}{w:g}"
            for u, v, w in self.edges()
        ]
        return "\n".join(lines) + ("\n" if lines else "")


@dataclass(frozen=True)
class ParseReport:
    node_count: int
    edge_count: int
    duplicate_lines_dropped: int
    self_loops_dropped: int
    malformed_lines: tuple[tuple[int, str], ...]


def _detect_separator(line: str) -> str:
    if "," in line:
        return "comma"
    if "\t" in line:
        return "tab"
    return "whitespace"


def _split(line: str, separator: str) -> list[str]:
    if separator == "comma":
        parts = line.split(",")
    elif separator == "tab":
        parts = line.split("\t")
    else:
        parts = line.split()
    return [p.strip() for p in parts]


def parse_edge_list(text: str, separator: str = "auto") -> tuple[Graph, ParseReport]:
    """Parse an edge list into a graph plus a report of dropped input.

    One edge per line, `label1<sep>label2[<sep>weight]`. Blank lines and
    lines starting with '#' are skipped. Auto separator detection looks at
    the first data line: comma, then tab, then any whitespace run. Weight
    defaults to 1.0; on duplicate edges the first weight wins.
    """
    if separator not in SEPARATORS:
        raise ValueError(f"separator must be one of {SEPARATORS}, got {separator!r}")

    data_lines: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        data_lines.append((lineno, line))
    if not data_lines:
        raise EmptyInputError("no data lines in input")

    if separator == "auto":
        separator = _detect_separator(data_lines[0][1])

    labels: list[str] = []
    label_ids: dict[str, int] = {}
    edges: dict[tuple[int, int], float] = {}
    duplicates = 0
    self_loops = 0
    malformed: list[tuple[int, str]] = []

    def intern(label: str) -> int:
        if label not in label_ids:
            label_ids[label] = len(labels)
            labels.append(label)
        return label_ids[label]

    for lineno, line in data_lines:
        parts = _split(line, separator)
        if len(parts) < 2:
            malformed.append((lineno, "expected at least two labels"))
            continue
        if len(parts) > 3:
            malformed.append((lineno, f"too many fields ({len(parts)})"))
            continue
        a, b = parts[0], parts[1]
        if not a or not b:
            malformed.append((lineno, "empty label"))
            continue
        weight = 1.0
        if len(parts) == 3:
            try:
                weight = float(parts[2])
            except ValueError:
                malformed.append((lineno, f"bad weight {parts[2]!r}"))
                continue
            if not math.isfinite(weight) or weight <= 0:
                malformed.append((lineno, f"non-positive weight {parts[2]!r}"))
                continue
        u, v = intern(a), intern(b)
        if u == v:
            self_loops += 1
            continue
        key = (min(u, v), max(u, v))
        if key in edges:
            duplicates += 1
            continue
        edges[key] = weight

    if len(malformed) == len(data_lines):
        raise AllLinesMalformedError(
            f"all {len(data_lines)} data lines malformed; first: "
            f"line {malformed[0][0]}: {malformed[0][1]}"
        )

    adjacency: list[list[tuple[int, float]]] = [[] for _ in labels]
    for (u, v), w in edges.items():
        adjacency[u].append((v, w))
        adjacency[v].append((u, w))
    graph = Graph(
        labels=tuple(labels),
        adjacency=tuple(tuple(sorted(nbrs)) for nbrs in adjacency),
        edge_count=len(edges),
    )
    report = ParseReport(
        node_count=graph.node_count,
        edge_count=graph.edge_count,
        duplicate_lines_dropped=duplicates,
        self_loops_dropped=self_loops,
        malformed_lines=tuple(malformed),
    )
    return graph, report


def parse_seed_file(text: str, graph: Graph) -> list[int]:
    """Resolve one seed label per line to node ids, keeping file order.

    Blank lines and '#' comments are skipped, repeated labels are
    deduplicated, and every unknown label is collected into a single
    UnknownLabel error.
    """
    seeds: list[int] = []
    seen: set[int] = set()
    unknown: list[tuple[str, int]] = []
    found_any = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        label = raw.strip()
        if not label or label.startswith("#"):
            continue
        found_any = True
        node = graph.id_of(label)
        if node is None:
            unknown.append((label, lineno))
        elif node not in seen:
            seen.add(node)
            seeds.append(node)
    if unknown:
        raise UnknownLabelError(unknown)
    if not found_any:
        raise EmptySeedSetError("seed file contains no labels")
    return seeds


def neighbors(graph: Graph, v: int) -> list[int]:
    """Adjacent node ids in ascending order."""
    return graph.neighbors(v)


def connected_components(graph: Graph) -> list[list[int]]:
    """Connected components as sorted id lists, ordered by smallest member."""
    seen = [False] * graph.node_count
    components: list[list[int]] = []
    for start in range(graph.node_count):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u, _ in graph.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        components.append(sorted(comp))
    return components


def stats(graph: Graph) -> dict[str, int]:
    return {
        "node_count": graph.node_count,
        "edge_count": graph.edge_count,
        "connected_component_count": len(connected_components(graph)),
    }


def induced_subgraph(graph: Graph, nodes: list[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph on the given nodes, relabeled densely in ascending id order.

    Returns the subgraph and the old-id -> new-id mapping.
    """
    members = sorted(set(nodes))
    for v in members:
        graph.check_node(v)
    remap = {old: new for new, old in enumerate(members)}
    adjacency = tuple(
        tuple(
            (remap[u], w)
            for u, w in graph.adjacency[old]
            if u in remap
        )
        for old in members
    )
    edge_count = sum(len(nbrs) for nbrs in adjacency) // 2
    sub = Graph(
        labels=tuple(graph.labels[v] for v in members),
        adjacency=adjacency,
        edge_count=edge_count,
    )
    return sub, remap
