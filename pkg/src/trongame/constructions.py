"""Generators for the extremal constructions: paths, visages, double-trees.

Every generator returns a validated labeled graph; landmark vertices
(bottlenecks, roots, starts) are exposed through the label map. The
double-tree leaf rows carry two edge families: E1 chains consecutive leaves
left to right within each half, and E2 cross-links the two leaf rows so that
for every i the column cycle u_i^1, v_i^1, u_i^2, v_i^2, ... closes. E2 here
is the minimal symmetric completion with that property; its index ranges are
pinned by the Hamilton-path and connectivity tests rather than taken on
faith from the (garbled) source ranges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import (
    Graph,
    GraphError,
    VertexSet,
    bfs_distances,
    build_graph,
    mask_from,
    mask_iter,
)


class ConstructionError(ValueError):
    """Raised when construction parameters are invalid."""


# ---------------------------------------------------------------------------
# two paths and the super-vertex


def two_paths(m: int) -> Graph:
    """Two disjoint simple paths with ``m`` vertices each."""
    if m < 2:
        raise ConstructionError(f"need at least 2 vertices per path, got {m}")
    edges = [(i, i + 1) for i in range(m - 1)]
    edges += [(m + i, m + i + 1) for i in range(m - 1)]
    labels = {
        "path1_start": 0,
        "path1_end": m - 1,
        "path2_start": m,
        "path2_end": 2 * m - 1,
    }
    return build_graph(False, 2 * m, edges, labels)


def add_super_vertex(g: Graph, attach: Iterable[int] | None = None) -> Graph:
    """Add one vertex adjacent to ``attach`` (default: every vertex of ``g``)."""
    if g.directed:
        raise ConstructionError("super-vertex requires an undirected graph")
    targets = list(range(g.n)) if attach is None else sorted(set(attach))
    super_v = g.n
    edges = g.edges() + [(v, super_v) for v in targets]
    labels = dict(g.labels)
    labels["super"] = super_v
    return build_graph(False, g.n + 1, edges, labels)


# ---------------------------------------------------------------------------
# visages


def visage(l: int, overhead: Graph | None = None) -> Graph:
    """Overhead graph + two bottleneck vertices + a cycle of length 4l.

    Both bottlenecks are adjacent to every overhead vertex; cycle vertices at
    positions 0 mod 8 attach to the box bottleneck and positions 4 mod 8 to
    the cross bottleneck, so every fourth cycle vertex has exactly one
    bottleneck neighbor, alternating between the two. ``l`` must be even for
    the alternation to close around the cycle.
    """
    if l < 2 or l % 2 != 0:
        raise ConstructionError(f"cycle scale l must be even and >= 2, got {l}")
    if overhead is None:
        overhead = two_paths(4)
    if overhead.directed or overhead.n == 0:
        raise ConstructionError("overhead must be a nonempty undirected graph")
    box, cross = 0, 1
    ov_base = 2
    cyc_base = ov_base + overhead.n
    cyc_len = 4 * l
    edges = [(ov_base + u, ov_base + v) for u, v in overhead.edges()]
    for v in range(overhead.n):
        edges.append((box, ov_base + v))
        edges.append((cross, ov_base + v))
    for i in range(cyc_len):
        edges.append((cyc_base + i, cyc_base + (i + 1) % cyc_len))
        if i % 8 == 0:
            edges.append((box, cyc_base + i))
        elif i % 8 == 4:
            edges.append((cross, cyc_base + i))
    labels = {
        "bottleneck_box": box,
        "bottleneck_cross": cross,
        "overhead_start": ov_base,
        "cycle_start": cyc_base,
    }
    for name, v in overhead.labels.items():
        labels[f"overhead_{name}"] = ov_base + v
    return build_graph(False, cyc_base + cyc_len, edges, labels)


def planar_visage(
    variant: str,
    path_len: int,
    spacing: int | None = None,
    overhead: Graph | None = None,
) -> Graph:
    """Visage with the cycle replaced by a long path of ``path_len`` vertices.

    The Bob variant keeps the two-paths overhead and spacing 4. The Alice
    variant widens the spacing to 7 and uses an overhead with a designated
    start for Alice midway between the bottlenecks (its exact drawing is not
    recoverable from the source, so any undirected overhead with an
    ``alice_start`` label is accepted; the default is a 5-vertex path with
    the start at its center).
    """
    if variant not in ("bob", "alice"):
        raise ConstructionError(f"variant must be 'bob' or 'alice', got {variant!r}")
    if spacing is None:
        spacing = 4 if variant == "bob" else 7
    if path_len < 2 * spacing:
        raise ConstructionError(
            f"path of {path_len} vertices too short for two attachments "
            f"at spacing {spacing}"
        )
    if overhead is None:
        if variant == "bob":
            overhead = two_paths(4)
        else:
            overhead = build_graph(
                False, 5, [(i, i + 1) for i in range(4)], {"alice_start": 2}
            )
    if variant == "alice" and "alice_start" not in overhead.labels:
        raise ConstructionError("alice variant overhead needs an 'alice_start' label")
    if overhead.directed or overhead.n == 0:
        raise ConstructionError("overhead must be a nonempty undirected graph")
    box, cross = 0, 1
    ov_base = 2
    path_base = ov_base + overhead.n
    edges = [(ov_base + u, ov_base + v) for u, v in overhead.edges()]
    for v in range(overhead.n):
        edges.append((box, ov_base + v))
        edges.append((cross, ov_base + v))
    for i in range(path_len - 1):
        edges.append((path_base + i, path_base + i + 1))
    for a, i in enumerate(range(0, path_len, spacing)):
        edges.append((box if a % 2 == 0 else cross, path_base + i))
    labels = {
        "bottleneck_box": box,
        "bottleneck_cross": cross,
        "overhead_start": ov_base,
        "path_start": path_base,
        "path_end": path_base + path_len - 1,
    }
    for name, v in overhead.labels.items():
        labels[f"overhead_{name}"] = ov_base + v
    if variant == "alice":
        labels["alice_start"] = ov_base + overhead.labels["alice_start"]
    return build_graph(False, path_base + path_len, edges, labels)


# ---------------------------------------------------------------------------
# double-trees


@dataclass(frozen=True)
class DoubleTreeParams:
    """Shape record for a double-tree of branching degree d and height h."""

    d: int
    h: int
    upper_root: int
    lower_root: int
    # leaf maps: (i, j) -> vertex with i in 1..d (position under parent j)
    # and j in 1..l (leaf parents left to right), l = d^(h-1)
    upper_leaves: dict[tuple[int, int], int] = field(repr=False)
    lower_leaves: dict[tuple[int, int], int] = field(repr=False)

    @property
    def leaf_parent_count(self) -> int:
        return self.d ** (self.h - 1)

    @property
    def leaves_per_half(self) -> int:
        return self.d**self.h

    def upper_row(self) -> list[int]:
        return [self.upper_leaves[_leaf_key(x, self.d)] for x in range(self.leaves_per_half)]

    def lower_row(self) -> list[int]:
        return [self.lower_leaves[_leaf_key(x, self.d)] for x in range(self.leaves_per_half)]


def _leaf_key(row_index: int, d: int) -> tuple[int, int]:
    return row_index % d + 1, row_index // d + 1


def _balanced_tree(d: int, h: int, base: int) -> tuple[int, list[list[int]], list[int]]:
    """Children lists and leaf row (left to right) for a balanced d-ary tree
    rooted at ``base`` with vertices numbered in BFS order."""
    size = (d ** (h + 1) - 1) // (d - 1)
    children: list[list[int]] = [[] for _ in range(size)]
    level = [0]
    nxt = 1
    for _ in range(h):
        new_level = []
        for node in level:
            kids = list(range(nxt, nxt + d))
            children[node] = kids
            new_level.extend(kids)
            nxt += d
        level = new_level
    offset_children = [[base + c for c in kids] for kids in children]
    leaves = [base + v for v in level]
    return size, offset_children, leaves


def _e2_pairs(d: int, l: int) -> list[tuple[int, int]]:
    """E2 as (upper row index, lower row index) pairs.

    Within a column j, u_n pairs with every v_m for m >= n; between adjacent
    columns, u_n of column j+1 (wrapping l+1 -> 1) pairs with v_m of column j
    for m <= n. This is the completion under which every column cycle
    u_i^j, v_i^j, u_i^{j+1}, ... closes and the ferry edge (u_d^l, v_d^l)
    exists.
    """
    pairs = set()
    for j in range(1, l + 1):
        for n in range(1, d + 1):
            for m in range(n, d + 1):
                pairs.add(((j - 1) * d + (n - 1), (j - 1) * d + (m - 1)))
    for j in range(1, l + 1):
        j_up = j % l + 1  # column above: j+1, wrapping to 1 after l
        for n in range(1, d + 1):
            for m in range(1, n + 1):
                pairs.add(((j_up - 1) * d + (n - 1), (j - 1) * d + (m - 1)))
    return sorted(pairs)


def double_tree(d: int, h: int) -> tuple[Graph, DoubleTreeParams]:
    """Two balanced d-ary trees of height h joined along their leaf rows."""
    if d < 2:
        raise ConstructionError(f"branching degree must be >= 2, got {d}")
    if h < 1:
        raise ConstructionError(f"height must be >= 1, got {h}")
    size, upper_children, upper_leaves = _balanced_tree(d, h, 0)
    _, lower_children, lower_leaves = _balanced_tree(d, h, size)
    edges = []
    for parent, kids in enumerate(upper_children):
        edges.extend((parent, kid) for kid in kids)
    for parent, kids in enumerate(lower_children):
        edges.extend((size + parent, kid) for kid in kids)
    for row in (upper_leaves, lower_leaves):
        edges.extend((row[x], row[x + 1]) for x in range(len(row) - 1))
    edges.extend(
        (upper_leaves[ui], lower_leaves[vi]) for ui, vi in _e2_pairs(d, d ** (h - 1))
    )
    labels = {"upper_root": 0, "lower_root": size}
    g = build_graph(False, 2 * size, edges, labels)
    params = DoubleTreeParams(
        d=d,
        h=h,
        upper_root=0,
        lower_root=size,
        upper_leaves={_leaf_key(x, d): v for x, v in enumerate(upper_leaves)},
        lower_leaves={_leaf_key(x, d): v for x, v in enumerate(lower_leaves)},
    )
    return g, params


class _Node:
    __slots__ = ("vertex", "children")

    def __init__(self, vertex: int, children: list["_Node"]):
        self.vertex = vertex
        self.children = children


def _build_nodes(root: int, children: list[list[int]], base: int) -> _Node:
    kids = children[root - base] if base else children[root]
    return _Node(root, [_build_nodes(c, children, base) for c in kids])


def _forest_hamilton(forest: list[_Node], leaf_pos: dict[int, int]) -> list[int]:
    """Hamilton path over a drawn forest from its leftmost to rightmost leaf.

    Repeatedly peel the unique path joining the rightmost leaf of the
    leftmost subtree to the leftmost leaf of the second subtree (through the
    root), then stitch the peeled paths together in leaf order. Each peeled
    path owns two consecutive leaves, so consecutive stitch points are
    consecutive leaves, which are adjacent by the row edges.
    """
    forest = list(forest)
    paths: list[list[int]] = []
    while True:
        idx = next((i for i, t in enumerate(forest) if t.children), None)
        if idx is None:
            break
        tree = forest[idx]
        down_right = [tree.children[0]]
        while down_right[-1].children:
            down_right.append(down_right[-1].children[-1])
        down_left = [tree.children[1]]
        while down_left[-1].children:
            down_left.append(down_left[-1].children[0])
        path = [n.vertex for n in reversed(down_right)]
        path.append(tree.vertex)
        path.extend(n.vertex for n in down_left)
        paths.append(path)
        pieces: list[_Node] = []
        for node in down_right:  # top-down: non-path children sit left of the peel
            pieces.extend(node.children[:-1])
        for node in reversed(down_left):  # bottom-up: non-path children sit right
            pieces.extend(node.children[1:])
        pieces.extend(tree.children[2:])
        forest[idx : idx + 1] = pieces
    paths.extend([t.vertex] for t in forest)
    paths.sort(key=lambda p: leaf_pos[p[0]])
    out: list[int] = []
    for p in paths:
        out.extend(p)
    return out


def _half_tour(d: int, h: int, base: int) -> list[int]:
    """Root-to-rightmost-leaf tour of one half: descend to the leftmost leaf,
    hop to its row neighbor, then traverse the remaining forest."""
    size, children, leaves = _balanced_tree(d, h, base)
    local_children = [[c - base for c in kids] for kids in children]
    leaf_pos = {v: i for i, v in enumerate(leaves)}
    spine = [0]
    while local_children[spine[-1]]:
        spine.append(local_children[spine[-1]][0])
    pieces: list[_Node] = []
    for node in reversed(spine):  # bottom-up: remaining subtrees left to right
        for c in local_children[node][1:]:
            pieces.append(_build_nodes_local(c, local_children, base))
    tour = [base + v for v in spine]
    tour.extend(_forest_hamilton(pieces, leaf_pos))
    return tour


def _build_nodes_local(root: int, children: list[list[int]], base: int) -> _Node:
    return _Node(base + root, [_build_nodes_local(c, children, base) for c in children[root]])


def double_tree_hamilton(d: int, h: int) -> list[int]:
    """Hamilton path from the upper root to the lower root of double_tree(d, h)."""
    if d < 2 or h < 1:
        raise ConstructionError("need d >= 2 and h >= 1")
    size = (d ** (h + 1) - 1) // (d - 1)
    upper = _half_tour(d, h, 0)
    lower = _half_tour(d, h, size)
    return upper + lower[::-1]


def select_afar_leaves(
    g: Graph, leaves: Iterable[int], m: int, min_dist: int
) -> VertexSet | None:
    """Greedy selection of ``m`` leaves with pairwise BFS distance >= min_dist.

    Returns the chosen set as a bitmask, or None when the greedy sweep cannot
    reach ``m`` (callers raise the tree height and retry).
    """
    candidates = sorted(set(leaves))
    if not candidates:
        raise ConstructionError("leaf set must be nonempty")
    chosen: list[int] = []
    dists: list[list[float]] = []
    for v in candidates:
        if all(dist[v] >= min_dist for dist in dists):
            chosen.append(v)
            if len(chosen) == m:
                return mask_from(chosen)
            dists.append(bfs_distances(g, v))
    return None


# ---------------------------------------------------------------------------
# k-connected visage


def minimal_afar_height(k: int, h_cap: int = 9) -> int:
    """Smallest height whose degree-k double-tree yields k leaves pairwise
    2k apart."""
    for h in range(1, h_cap + 1):
        g, params = double_tree(k, h)
        if select_afar_leaves(g, params.upper_row(), k, 2 * k) is not None:
            return h
    raise ConstructionError(f"no height <= {h_cap} yields {k} afar leaves")


def k_connected_visage(
    k: int,
    h: int | None = None,
    overhead_path_len: int | None = None,
    num_double_trees: int = 4,
) -> Graph:
    """k overhead paths, 2k bottleneck vertices, and a strand of degree-k
    double-trees chained root to root, whose afar leaves carry the
    bottleneck attachments.

    Alternate double-trees attach their k pairwise-2k-afar upper leaves one
    to one to the k box vertices, the others to the k cross vertices; every
    overhead vertex is adjacent to every bottleneck vertex. The strand is
    left open: closing it into a cycle would raise every root's degree to
    k + 1 and with it the whole graph's connectivity to k + 1, while the open
    strand's outer roots keep degree k, pinning vertex connectivity at
    exactly k (each double-tree is k-connected and keeps a surviving
    bottleneck attachment under any k - 1 deletions).
    """
    if k < 2:
        raise ConstructionError(f"k must be >= 2, got {k}")
    if num_double_trees < 4 or num_double_trees % 2 != 0:
        raise ConstructionError("need an even number >= 4 of double-trees")
    if overhead_path_len is None:
        overhead_path_len = 2 * k
    if h is None:
        h = minimal_afar_height(k)
    dt, params = double_tree(k, h)
    afar = select_afar_leaves(dt, params.upper_row(), k, 2 * k)
    if afar is None:
        raise ConstructionError(f"height {h} too small for {k} afar leaves")
    afar_leaves = list(mask_iter(afar))

    edges: list[tuple[int, int]] = []
    labels: dict[str, int] = {}
    boxes = list(range(k))
    crosses = list(range(k, 2 * k))
    for i, v in enumerate(boxes, start=1):
        labels[f"box_{i}"] = v
    for i, v in enumerate(crosses, start=1):
        labels[f"cross_{i}"] = v
    nxt = 2 * k
    for p in range(k):
        for i in range(overhead_path_len):
            if i:
                edges.append((nxt + i - 1, nxt + i))
            for b in boxes + crosses:
                edges.append((b, nxt + i))
        labels[f"overhead_{p + 1}_start"] = nxt
        nxt += overhead_path_len

    dt_edges = dt.edges()
    uppers, lowers = [], []
    for t in range(num_double_trees):
        base = nxt
        edges.extend((base + u, base + v) for u, v in dt_edges)
        uppers.append(base + params.upper_root)
        lowers.append(base + params.lower_root)
        labels[f"dt_{t + 1}_upper_root"] = uppers[-1]
        labels[f"dt_{t + 1}_lower_root"] = lowers[-1]
        attach_to = boxes if t % 2 == 0 else crosses
        for i, (leaf, b) in enumerate(zip(afar_leaves, attach_to), start=1):
            edges.append((b, base + leaf))
            labels[f"dt_{t + 1}_attach_{i}"] = base + leaf
        nxt += dt.n
    for t in range(num_double_trees):
        edges.append((lowers[t], uppers[(t + 1) % num_double_trees]))
    return build_graph(False, nxt, edges, labels)
