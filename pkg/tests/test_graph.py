import math

import pytest
from hypothesis import given, strategies as st

from trongame.graph import (
    GraphError,
    Graph,
    bfs_distances,
    build_graph,
    induced_subgraph,
    mask_from,
    mask_iter,
    mask_size,
)

from conftest import cycle_graph, path_graph


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    directed = draw(st.booleans())
    if directed:
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    else:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)) if pairs else st.just([]))
    return build_graph(directed, n, edges)


def test_single_edge_path():
    g = build_graph(False, 2, [(0, 1)])
    assert g.adj[0] == (1,)
    assert g.adj[1] == (0,)


def test_directed_chain_has_empty_sink_adjacency():
    g = build_graph(True, 3, [(0, 1), (1, 2)])
    assert g.adj[2] == ()
    assert g.adj[0] == (1,)


def test_duplicate_edge_rejected():
    with pytest.raises(GraphError, match=r"duplicate edge \(0, 1\)"):
        build_graph(False, 3, [(0, 1), (0, 1)])


def test_reversed_duplicate_rejected_only_when_undirected():
    with pytest.raises(GraphError, match="duplicate"):
        build_graph(False, 2, [(0, 1), (1, 0)])
    g = build_graph(True, 2, [(0, 1), (1, 0)])
    assert g.has_edge(0, 1) and g.has_edge(1, 0)


def test_self_loop_rejected():
    with pytest.raises(GraphError, match="self-loop at vertex 1"):
        build_graph(False, 3, [(1, 1)])


def test_out_of_range_endpoint_rejected():
    with pytest.raises(GraphError, match=r"edge \(0, 5\)"):
        build_graph(False, 3, [(0, 5)])


def test_bad_label_rejected():
    with pytest.raises(GraphError, match="label 'root'"):
        build_graph(False, 2, [(0, 1)], {"root": 9})


def test_bfs_on_cycle():
    assert bfs_distances(cycle_graph(4), 0) == [0, 1, 2, 1]


def test_bfs_respects_direction():
    g = build_graph(True, 3, [(0, 1), (1, 2)])
    assert bfs_distances(g, 2) == [math.inf, math.inf, 0]


def test_bfs_invalid_source():
    with pytest.raises(GraphError):
        bfs_distances(path_graph(3), 7)


@given(graphs())
def test_undirected_adjacency_is_symmetric(g):
    if not g.directed:
        for u in range(g.n):
            for v in g.adj[u]:
                assert u in g.adj[v]


@given(graphs())
def test_json_round_trip(g):
    h = Graph.from_json(g.to_json())
    assert h.directed == g.directed
    assert h.n == g.n
    assert sorted(h.edges()) == sorted(g.edges())
    assert h.labels == g.labels


@given(graphs(max_n=6), st.data())
def test_bfs_triangle_inequality(g, data):
    if g.n < 3:
        return
    u = data.draw(st.integers(0, g.n - 1))
    v = data.draw(st.integers(0, g.n - 1))
    w = data.draw(st.integers(0, g.n - 1))
    du = bfs_distances(g, u)
    dv = bfs_distances(g, v)
    if du[v] < math.inf and dv[w] < math.inf:
        assert du[w] <= du[v] + dv[w]


def test_dot_output_directed_and_labels():
    g = build_graph(True, 2, [(0, 1)], {"src": 0})
    dot = g.to_dot()
    assert "digraph" in dot
    assert "0 -> 1;" in dot
    assert "src" in dot


def test_dot_output_undirected():
    dot = path_graph(2).to_dot()
    assert dot.startswith("graph")
    assert "0 -- 1;" in dot


def test_mask_helpers():
    m = mask_from([0, 3, 5])
    assert mask_size(m) == 3
    assert list(mask_iter(m)) == [0, 3, 5]


def test_induced_subgraph_keeps_labels():
    g = build_graph(False, 4, [(0, 1), (1, 2), (2, 3)], {"a": 1, "b": 3})
    h = induced_subgraph(g, [1, 2])
    assert h.n == 2
    assert h.edges() == [(0, 1)]
    assert h.labels == {"a": 0}
