import itertools
import random

import networkx as nx
import pytest

from pursuit.constructions import (
    ConstructionError,
    KiteMap,
    Tag,
    add_kite_diagonals,
    antiprism,
    cycle_embedding,
    dodecahedron,
    drawing_from_coordinates,
    icosahedron,
    kite_instances,
    one_planarize,
    petersen_two_planar_drawing,
    prism,
    pyramid,
    quadrangulate,
    radial_graph,
    subdivide_uniform,
    subdivisions_for,
    triangulate_pentagons,
)
from pursuit.graph import Graph, GraphError, bfs_distances, complete_graph, path_graph


def test_dodecahedron():
    d = dodecahedron()
    g = d.graph
    assert (g.n, g.m, len(d.faces)) == (20, 30, 12)
    assert all(len(f) == 5 for f in d.faces)
    assert nx.is_isomorphic(nx.Graph(g.edges()), nx.dodecahedral_graph())


def test_pentagon_triangulation():
    t = triangulate_pentagons(dodecahedron())
    g = t.graph
    assert (g.n, g.m, len(t.faces)) == (32, 90, 60)
    assert len(t.vertices_tagged(Tag.T_APEX)) == 12
    assert all(len(f) == 3 for f in t.faces)
    assert nx.check_planarity(nx.Graph(g.edges()))[0]


def test_quadrangulation():
    q = quadrangulate(triangulate_pentagons(dodecahedron()))
    g = q.graph
    assert (g.n, g.m, len(q.faces)) == (182, 360, 180)
    assert g.is_bipartite()
    assert all(len(f) == 4 for f in q.faces)
    assert len(q.vertices_tagged(Tag.EDGE_MID)) == 90
    assert len(q.vertices_tagged(Tag.FACE_VERTEX)) == 60
    # original dodecahedron neighbours end up at distance two through their midpoint
    d = dodecahedron().graph
    for a, b in d.edges():
        mid = q.midpoint(a, b)
        assert g.has_edge(a, mid) and g.has_edge(mid, b)
        assert bfs_distances(g, a)[b] == 2


def test_kite_completion_of_q():
    q = quadrangulate(triangulate_pentagons(dodecahedron()))
    g, km = add_kite_diagonals(q)
    assert g.n == 182 and g.m == 720 == 4 * g.n - 8
    assert len(km.crossings) == 180
    km.validate(g)
    # each crossing edge is crossed exactly once and kite sides are uncrossed Q edges
    assert len(km.crossed_edges()) == 360
    assert km.crossed_edges().isdisjoint(q.graph.edges())


def test_kite_map_rejects_double_crossing():
    e, f, h = (0, 2), (1, 3), (4, 5)
    with pytest.raises(ConstructionError):
        KiteMap(frozenset({frozenset({e, f}), frozenset({e, h})}), {})


def test_c4_gets_one_crossing():
    g, km = add_kite_diagonals(cycle_embedding(4))
    assert g.m == 6 and len(km.crossings) == 1


@pytest.mark.parametrize("make", [lambda: prism(5), lambda: antiprism(4), lambda: pyramid(6), icosahedron, dodecahedron])
def test_polyhedra_are_planar_and_3_connected(make):
    p = make()
    h = nx.Graph(p.graph.edges())
    assert nx.check_planarity(h)[0]
    assert nx.node_connectivity(h) >= 3
    assert p.graph.n - p.graph.m + len(p.faces) == 2


def test_radial_graph_is_quadrangulation():
    r = radial_graph(prism(4))
    assert all(len(f) == 4 for f in r.faces)
    assert r.graph.is_bipartite()


def test_kite_instances():
    inst = kite_instances()
    assert len(inst) == 20
    names = set()
    for name, g, km in inst:
        names.add(name)
        assert g.m == 4 * g.n - 8
        km.validate(g)
        assert g.n < 182
    assert len(names) == 20


def test_subdivide_uniform():
    g = complete_graph(3)
    s = subdivide_uniform(g, 2)
    assert (s.n, s.m) == (9, 9)
    d = bfs_distances(s, 0)
    assert d[1] == d[2] == 3
    assert subdivide_uniform(g, 0) == g
    with pytest.raises(GraphError):
        subdivide_uniform(g, -1)


def test_subdivide_ids_follow_edge_order():
    g = path_graph(3)  # edges (0,1), (1,2)
    s = subdivide_uniform(g, 2)
    assert s.has_edge(0, 3) and s.has_edge(3, 4) and s.has_edge(4, 1)
    assert s.has_edge(1, 5) and s.has_edge(6, 2)


@pytest.mark.parametrize("k,s", [(1, 0), (2, 2), (3, 2), (4, 4), (5, 4)])
def test_subdivision_counts(k, s):
    assert subdivisions_for(k) == s
    assert (s + 1) % 2 == 1


def test_petersen_drawing():
    d = petersen_two_planar_drawing()
    d.validate()
    assert d.k == 2
    crossed = {e for e, seq in d.crossings.items() if seq}
    assert len(crossed) == 5  # the pentagram edges
    assert all(len(d.crossings[e]) == 2 for e in crossed)


def test_one_planarize_petersen():
    g, cert = one_planarize(petersen_two_planar_drawing())
    assert g.n == 40 and g.m == 45
    assert cert.max_crossings == 1
    assert len(cert.crossing_pairs) == 5
    for a, b in cert.crossing_pairs:
        assert g.has_edge(*a) and g.has_edge(*b)
        assert not set(a) & set(b)


def test_one_planarize_random_straight_line_drawings():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(4, 8)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5]
        g = Graph.from_edges(n, edges)
        coords = [(rng.random(), rng.random()) for _ in range(n)]
        d = drawing_from_coordinates(g, coords)
        if d.k == 0:
            continue
        h, cert = one_planarize(d)
        assert cert.max_crossings <= 1
        assert h.n == n + g.m * subdivisions_for(d.k)
