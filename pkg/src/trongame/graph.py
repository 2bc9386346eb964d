"""Finite simple graphs with stable vertex indices and landmark labels.

Vertices are dense 0-based integers. Landmark vertices (starts, roots,
bottlenecks, ...) are exposed through the ``labels`` map so that embedded
constructions stay addressable after composition. Vertex sets are plain
``int`` bitmasks (``VertexSet``), which gives O(1) membership tests and
popcounts and keeps solver state hashable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

# Bitmask over vertex indices; bit v set <=> vertex v in the set.
VertexSet = int


class GraphError(ValueError):
    """Raised for malformed graphs or invalid graph operations."""


def mask_from(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def mask_contains(mask: VertexSet, v: int) -> bool:
    return (mask >> v) & 1 == 1


def mask_size(mask: VertexSet) -> int:
    return mask.bit_count()


def mask_iter(mask: VertexSet) -> Iterator[int]:
    """Yield members in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph, directed or undirected.

    ``adj[v]`` lists v's out-neighbors (all neighbors when undirected) in
    ascending order; ``adj_masks[v]`` is the same set as a bitmask.
    """

    directed: bool
    n: int
    adj: tuple[tuple[int, ...], ...]
    labels: dict[str, int] = field(default_factory=dict)
    adj_masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        masks = tuple(mask_from(nbrs) for nbrs in self.adj)
        object.__setattr__(self, "adj_masks", masks)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return mask_contains(self.adj_masks[u], v)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """Canonical edge list: every arc when directed, u < v otherwise."""
        out = []
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if self.directed or u < v:
                    out.append((u, v))
        return out

    def label_of(self, name: str) -> int:
        try:
            return self.labels[name]
        except KeyError:
            raise GraphError(f"unknown label {name!r}") from None

    def relabeled(self, labels: Mapping[str, int]) -> "Graph":
        """Copy of this graph with ``labels`` replacing the label map."""
        return build_graph(self.directed, self.n, self.edges(), dict(labels))

    def to_json(self) -> dict:
        return {
            "directed": self.directed,
            "n": self.n,
            "edges": [[u, v] for u, v in self.edges()],
            "labels": dict(self.labels),
        }

    @staticmethod
    def from_json(data: Mapping) -> "Graph":
        try:
            directed = bool(data["directed"])
            n = int(data["n"])
            edges = [(int(u), int(v)) for u, v in data["edges"]]
            labels = {str(k): int(v) for k, v in data.get("labels", {}).items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed graph JSON: {exc}") from exc
        return build_graph(directed, n, edges, labels)

    def to_dot(self, name: str = "g") -> str:
        """Render as DOT; labels become node annotations."""
        kind, arrow = ("digraph", "->") if self.directed else ("graph", "--")
        names_by_vertex: dict[int, list[str]] = {}
        for label, v in sorted(self.labels.items()):
            names_by_vertex.setdefault(v, []).append(label)
        lines = [f"{kind} {name} {{"]
        for v in range(self.n):
            tags = names_by_vertex.get(v)
            text = f"{v}" if not tags else f"{v}\\n{','.join(tags)}"
            lines.append(f'  {v} [label="{text}"];')
        for u, v in self.edges():
            lines.append(f"  {u} {arrow} {v};")
        lines.append("}")
        return "\n".join(lines)


def build_graph(
    directed: bool,
    n: int,
    edges: Sequence[tuple[int, int]],
    labels: Mapping[str, int] | None = None,
) -> Graph:
    """Validate and build a simple graph.

    Rejects self-loops, out-of-range endpoints, duplicate edges (duplicate
    ordered pairs when directed, duplicate unordered pairs otherwise), and
    labels pointing outside ``0..n-1``.
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    adj: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        adj[u].append(v)
        if not directed:
            adj[v].append(u)
    label_map: dict[str, int] = {}
    for name, v in (labels or {}).items():
        if not (0 <= v < n):
            raise GraphError(f"label {name!r} points to invalid vertex {v}")
        if name in label_map:
            raise GraphError(f"duplicate label {name!r}")
        label_map[name] = v
    return Graph(directed, n, tuple(tuple(sorted(a)) for a in adj), label_map)


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Shortest edge counts from ``source`` (directionally), inf if unreachable."""
    if not (0 <= source < g.n):
        raise GraphError(f"invalid source vertex {source}")
    dist: list[float] = [math.inf] * g.n
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for v in g.adj[u]:
                if dist[v] == math.inf:
                    dist[v] = d
                    nxt.append(v)
        frontier = nxt
    return dist


def induced_subgraph(g: Graph, keep: Sequence[int]) -> Graph:
    """Subgraph on ``keep`` (order defines new indices); labels on kept vertices survive."""
    index = {v: i for i, v in enumerate(keep)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges()
        if u in index and v in index
    ]
    labels = {name: index[v] for name, v in g.labels.items() if v in index}
    return build_graph(g.directed, len(keep), edges, labels)
