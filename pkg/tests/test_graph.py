import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pursuit.graph import (
    UNREACHABLE,
    Graph,
    GraphError,
    bfs_distances,
    closed_ball,
    complete_graph,
    connectivity_at_least,
    cycle_graph,
    dismantling_order,
    is_chordal,
    is_isometric_path,
    path_graph,
    petersen_graph,
    shortest_path_avoiding,
    verify_dismantling,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 5)])
    g = Graph.from_edges(3, [(2, 0), (0, 2), (1, 2)])
    assert g.edges() == [(0, 2), (1, 2)]
    assert g.degree(2) == 2


def test_petersen_basics():
    g = petersen_graph()
    assert (g.n, g.m) == (10, 15)
    assert all(g.degree(v) == 3 for v in range(10))
    assert max(max(bfs_distances(g, v)) for v in range(10)) == 2


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_bfs_matches_networkx(g):
    h = to_nx(g)
    for v in range(g.n):
        d = bfs_distances(g, v)
        ref = nx.single_source_shortest_path_length(h, v)
        assert d == [ref.get(x, UNREACHABLE) for x in range(g.n)]


def test_bfs_restricted():
    g = cycle_graph(6)
    d = bfs_distances(g, 0, allowed={0, 1, 2, 3})
    assert d == [0, 1, 2, 3, UNREACHABLE, UNREACHABLE]


def test_closed_ball():
    g = path_graph(6)
    assert closed_ball(g, 2, 0) == {2}
    assert closed_ball(g, 2, 2) == {0, 1, 2, 3, 4}


def test_shortest_path_avoiding():
    g = cycle_graph(6)
    assert shortest_path_avoiding(g, 0, 3) == [0, 1, 2, 3]
    assert shortest_path_avoiding(g, 0, 3, {1}) == [0, 5, 4, 3]
    assert shortest_path_avoiding(g, 0, 3, {1, 5}) is None
    assert shortest_path_avoiding(g, 4, 4) == [4]
    with pytest.raises(GraphError):
        shortest_path_avoiding(g, 0, 3, {3})


def test_isometric_path():
    g = cycle_graph(6)
    assert is_isometric_path(g, [0, 1, 2, 3])
    assert not is_isometric_path(g, [0, 1, 2, 3, 4])


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_chordality_matches_networkx(g):
    ok, order = is_chordal(g)
    assert ok == nx.is_chordal(to_nx(g))
    assert (order is not None) == ok


def test_chordal_examples():
    assert is_chordal(complete_graph(5))[0]
    assert not is_chordal(cycle_graph(4))[0]
    assert is_chordal(cycle_graph(3))[0]


def test_dismantling_examples():
    assert dismantling_order(path_graph(7)) is not None
    assert dismantling_order(cycle_graph(4)) is None
    assert dismantling_order(petersen_graph()) is None
    order = dismantling_order(complete_graph(4))
    assert verify_dismantling(complete_graph(4), order)
    with pytest.raises(GraphError):
        dismantling_order(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_dismantling_certificates_check_out():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(1, 8)
        edges = [(v, rng.randrange(v)) for v in range(1, n)]
        edges += [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.4]
        g = Graph.from_edges(n, set(tuple(sorted(e)) for e in edges))
        order = dismantling_order(g)
        if order is not None:
            assert verify_dismantling(g, order)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7))
def test_connectivity_matches_networkx(g):
    h = to_nx(g)
    for c in range(1, g.n):
        expected = nx.node_connectivity(h) >= c if nx.is_connected(h) else False
        assert connectivity_at_least(g, c) == expected


def test_connectivity_requires_enough_vertices():
    with pytest.raises(GraphError):
        connectivity_at_least(complete_graph(3), 3)
