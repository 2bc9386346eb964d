"""Independent verification algorithms used as oracles against the generators
and the solver: exact vertex connectivity (max-flow with vertex splitting,
cross-checkable by brute-force cut enumeration), exact longest simple paths
(budgeted exponential search), Hamilton-path checking, and the tree /
super-vertex / deletion lemma verifiers."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .constructions import add_super_vertex
from .engine import GameRules, Objective
from .graph import Graph, GraphError, VertexSet, bfs_distances, induced_subgraph, mask_from
from .solver import optimal_start_report, solve


class AnalysisError(ValueError):
    pass


# ---------------------------------------------------------------------------
# vertex connectivity


@dataclass
class ConnectivityReport:
    """Exact connectivity with machine-checkable witnesses.

    ``witness_cut`` is a vertex set whose removal disconnects the graph
    (None for complete graphs, where no cut exists and kappa = n - 1 by
    convention; the empty set for disconnected input). ``menger_paths``
    holds, for each sampled pair, kappa internally vertex-disjoint paths.
    """

    kappa: int
    witness_cut: VertexSet | None
    menger_paths: dict[tuple[int, int], list[list[int]]] = field(default_factory=dict)


class _SplitFlow:
    """Unit-capacity vertex-split max flow on an undirected graph."""

    INF = 1 << 30

    def __init__(self, g: Graph):
        self.n = g.n
        self.g = g
        # node 2v = v_in, 2v+1 = v_out
        self.head: list[list[int]] = [[] for _ in range(2 * g.n)]
        self.to: list[int] = []
        self.cap: list[int] = []
        for v in range(g.n):
            self._add(2 * v, 2 * v + 1, 1)
        for u, v in g.edges():
            self._add(2 * u + 1, 2 * v, self.INF)
            self._add(2 * v + 1, 2 * u, self.INF)

    def _add(self, a: int, b: int, c: int) -> None:
        self.head[a].append(len(self.to))
        self.to.append(b)
        self.cap.append(c)
        self.head[b].append(len(self.to))
        self.to.append(a)
        self.cap.append(0)

    def max_flow(self, s: int, t: int, stop_at: int) -> int:
        """Flow from s_out to t_in, stopping early once >= stop_at."""
        src, snk = 2 * s + 1, 2 * t
        base = [c for c in self.cap]
        flow = 0
        while flow < stop_at:
            parent_edge = [-1] * (2 * self.n)
            parent_edge[src] = -2
            frontier = [src]
            while frontier and parent_edge[snk] == -1:
                nxt = []
                for a in frontier:
                    for e in self.head[a]:
                        b = self.to[e]
                        if parent_edge[b] == -1 and self.cap[e] > 0:
                            parent_edge[b] = e
                            nxt.append(b)
                frontier = nxt
            if parent_edge[snk] == -1:
                break
            b = snk
            while b != src:
                e = parent_edge[b]
                self.cap[e] -= 1
                self.cap[e ^ 1] += 1
                b = self.to[e ^ 1]
            flow += 1
        self._last_residual_source = src
        self.cap, self._spent = base, self.cap
        # keep the spent capacities for cut extraction by the caller
        return flow

    def min_cut_vertices(self, s: int, t: int) -> list[int]:
        """Vertices whose in->out arc crosses the residual reachability cut.

        Must be called right after max_flow (uses its residual)."""
        spent = self._spent
        src = 2 * s + 1
        seen = [False] * (2 * self.n)
        seen[src] = True
        stack = [src]
        while stack:
            a = stack.pop()
            for e in self.head[a]:
                b = self.to[e]
                if not seen[b] and spent[e] > 0:
                    seen[b] = True
                    stack.append(b)
        return [v for v in range(self.n) if seen[2 * v] and not seen[2 * v + 1]]

    def flow_paths(self, s: int, t: int) -> list[list[int]]:
        """Decompose the last flow into internally vertex-disjoint s-t paths."""
        spent = self._spent
        used_edge = [False] * len(spent)
        paths = []
        while True:
            path = [s]
            node = 2 * s + 1
            ok = False
            while True:
                advanced = False
                for e in self.head[node]:
                    # a forward edge carried flow iff its reverse gained capacity
                    if e % 2 == 0 and not used_edge[e] and spent[e] < self.cap[e]:
                        used_edge[e] = True
                        b = self.to[e]
                        if b == 2 * t:
                            path.append(t)
                            ok = True
                        else:
                            if b % 2 == 0:  # arrived at some v_in
                                path.append(b // 2)
                            advanced = True
                            node = b + 1 if b % 2 == 0 else b
                        break
                if ok or not advanced:
                    break
            if not ok:
                return paths
            paths.append(path)


def _is_complete(g: Graph) -> bool:
    return all(g.degree(v) == g.n - 1 for v in range(g.n))


def _is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    import math

    return all(d < math.inf for d in bfs_distances(g, 0))


def vertex_connectivity(
    g: Graph, menger_sample_pairs: int = 0, seed: int = 0
) -> ConnectivityReport:
    """Exact kappa via max flow over the standard pair schedule.

    Schedule: with s a minimum-degree vertex, flow from s to every
    non-neighbor of s and from each neighbor of s to every non-neighbor of
    that neighbor; any minimum cut misses one of these source/sink pairs, and
    the minimum-degree bound covers the rest.
    """
    if g.directed:
        raise AnalysisError("vertex connectivity is defined here for undirected graphs")
    if g.n < 2:
        raise AnalysisError("connectivity needs at least 2 vertices")
    if not _is_connected(g):
        return ConnectivityReport(0, 0)
    if _is_complete(g):
        return ConnectivityReport(g.n - 1, None)

    s = min(range(g.n), key=g.degree)
    best = g.degree(s)
    witness = list(g.neighbors(s))
    flow = _SplitFlow(g)
    sources = [s] + list(g.neighbors(s))
    for src in sources:
        nbr_mask = g.adj_masks[src] | (1 << src)
        for t in range(g.n):
            if (nbr_mask >> t) & 1:
                continue
            f = flow.max_flow(src, t, stop_at=best)
            if f < best:
                best = f
                witness = flow.min_cut_vertices(src, t)

    report = ConnectivityReport(best, mask_from(witness))
    if menger_sample_pairs:
        rng = random.Random(seed)
        pairs = set()
        tries = 0
        while len(pairs) < menger_sample_pairs and tries < 50 * menger_sample_pairs:
            tries += 1
            u, v = rng.randrange(g.n), rng.randrange(g.n)
            if u != v and not g.has_edge(u, v):
                pairs.add((min(u, v), max(u, v)))
        for u, v in sorted(pairs):
            f = flow.max_flow(u, v, stop_at=g.n)
            assert f >= best
            report.menger_paths[(u, v)] = flow.flow_paths(u, v)[:best]
    return report


def brute_force_connectivity(g: Graph) -> tuple[int, VertexSet | None]:
    """kappa by enumerating candidate cuts size-ascending (small graphs only)."""
    if g.directed:
        raise AnalysisError("undirected graphs only")
    if not _is_connected(g):
        return 0, 0
    if _is_complete(g):
        return g.n - 1, None
    for size in range(1, g.n - 1):
        for cut in itertools.combinations(range(g.n), size):
            rest = [v for v in range(g.n) if v not in cut]
            if len(rest) >= 2 and not _is_connected(induced_subgraph(g, rest)):
                return size, mask_from(cut)
    return g.n - 1, None


# ---------------------------------------------------------------------------
# longest simple paths


@dataclass
class LongestPathResult:
    length: int  # edges
    path: list[int]
    budget_exhausted: bool = False


def longest_path_length(
    g: Graph,
    source: int | None = None,
    forbidden_transit: VertexSet = 0,
    node_budget: int | None = None,
) -> LongestPathResult:
    """Exact longest simple path (edge count), respecting edge direction.

    Vertices in ``forbidden_transit`` may appear only as the path's first
    vertex. Exponential search with an optional node budget; exceeding the
    budget is reported on the result, never silently wrong.
    """
    sources = range(g.n) if source is None else [source]
    best_len = -1
    best_path: list[int] = []
    nodes = 0
    exhausted = False
    adj = g.adj
    blocked = forbidden_transit

    def dfs(v: int, used: int, length: int, trail: list[int]) -> None:
        nonlocal best_len, best_path, nodes, exhausted
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            exhausted = True
            return
        if length > best_len:
            best_len = length
            best_path = trail.copy()
        for w in adj[v]:
            bit = 1 << w
            if used & bit or blocked & bit:
                continue
            trail.append(w)
            dfs(w, used | bit, length + 1, trail)
            trail.pop()
            if exhausted:
                return

    import sys

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 2 * g.n + 500))
    for s in sources:
        dfs(s, 1 << s, 0, [s])
        if exhausted:
            break
    return LongestPathResult(best_len, best_path, exhausted)


# ---------------------------------------------------------------------------
# Hamilton path checking


@dataclass
class HamiltonCheck:
    ok: bool
    violation: str | None = None


def check_hamilton_path(g: Graph, seq: list[int]) -> HamiltonCheck:
    """Verify that ``seq`` visits every vertex exactly once along edges."""
    seen = set()
    for idx, v in enumerate(seq):
        if not (0 <= v < g.n):
            return HamiltonCheck(False, f"vertex {v} at index {idx} out of range")
        if v in seen:
            return HamiltonCheck(False, f"repeated vertex {v} at index {idx}")
        seen.add(v)
    if len(seq) != g.n:
        return HamiltonCheck(False, f"covers {len(seq)} of {g.n} vertices")
    for idx, (a, b) in enumerate(zip(seq, seq[1:])):
        if not g.has_edge(a, b):
            return HamiltonCheck(False, f"({a}, {b}) at index {idx} is not an edge")
    return HamiltonCheck(True)


# ---------------------------------------------------------------------------
# lemma verifiers (solver-backed)


def _is_tree(g: Graph) -> bool:
    return not g.directed and len(g.edges()) == g.n - 1 and _is_connected(g)


def verify_tree_lemma(t: Graph) -> bool:
    """Optimal play on a tree satisfies alpha <= beta + 1 and beta <= 2*alpha."""
    if not _is_tree(t):
        raise AnalysisError("input is not a tree")
    out = solve(t, GameRules.free()).outcome
    return out.alpha <= out.beta + 1 and out.beta <= 2 * out.alpha


def verify_supervertex_lemma(g: Graph) -> bool | None:
    """On Bob-favored g, adding a super-vertex flips the advantage:
    (alpha/beta) on the extended graph >= (beta/alpha) on g.

    Returns None when the precondition (beta/alpha > 1) does not hold."""
    base = solve(g, GameRules.free()).outcome
    if base.ratio <= 1:
        return None
    extended = solve(add_super_vertex(g), GameRules.free()).outcome
    return Fraction(extended.alpha, extended.beta) >= base.ratio


def verify_deletion_lemma(g: Graph) -> bool | None:
    """On Alice-favored g, deleting her optimal start v gives H with
    (beta+1)/alpha on H >= alpha/beta on g.

    Returns None when the precondition (beta/alpha < 1) does not hold."""
    base = solve(g, GameRules.free()).outcome
    if base.ratio >= 1:
        return None
    report = optimal_start_report(g, GameRules.free())
    start = min(report, key=lambda v: (report[v].ratio, v))
    rest = [v for v in range(g.n) if v != start]
    h = induced_subgraph(g, rest)
    if h.n < 2:
        return None
    after = solve(h, GameRules.free()).outcome
    return Fraction(after.beta + 1, after.alpha) >= Fraction(base.alpha, base.beta)
