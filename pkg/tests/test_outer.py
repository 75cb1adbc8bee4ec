import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pursuit.game import ClaimViolation
from pursuit.graph import Graph, GraphError, complete_graph, cycle_graph, is_chordal
from pursuit.outer import (
    CycleWitness,
    OuterDrawing,
    OuterRobber,
    check_structure,
    chordless_cycles,
    crossing_counts,
    crossing_pairs,
    find_chordless_cycle,
    interleave,
    random_outer_one_planar,
    robber_policy_outer,
    structure_sweep,
    validate_outer_k,
)
from pursuit.solver import OptimalCops, solve
from pursuit.strategies.simulate import simulate


def brute_pairs(g):
    out = set()
    for e, f in itertools.combinations(g.edges(), 2):
        a, b = e
        c, d = f
        if len({a, b, c, d}) == 4 and ((a < c < b) ^ (a < d < b)):
            out.add(tuple(sorted((e, f))))
    return out


def test_crossing_pairs_examples():
    assert crossing_pairs(Graph.from_edges(4, [(0, 2), (1, 3)])) == {((0, 2), (1, 3))}
    assert crossing_pairs(Graph.from_edges(4, [(0, 1), (2, 3)])) == set()
    counts = crossing_counts(complete_graph(5))
    diagonals = [e for e in counts if (e[1] - e[0]) % 5 not in (1, 4)]
    assert len(diagonals) == 5 and all(counts[e] == 2 for e in diagonals)
    assert all(counts[e] == 0 for e in counts if e not in diagonals)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 9).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.sampled_from(list(itertools.combinations(range(n), 2)))))))
def test_crossing_pairs_match_brute_force(data):
    n, edges = data
    g = Graph.from_edges(n, edges)
    pairs = crossing_pairs(g)
    assert pairs == brute_pairs(g)
    for e, f in pairs:
        assert interleave(e, f) and interleave(f, e)


def test_validate_outer_k():
    assert validate_outer_k(complete_graph(4), 1)[0]
    assert not validate_outer_k(complete_graph(5), 1)[0]
    assert validate_outer_k(complete_graph(5), 2)[0]
    assert validate_outer_k(cycle_graph(7), 0)[0]
    with pytest.raises(GraphError):
        OuterDrawing(complete_graph(5), 1)


def test_find_chordless_cycle():
    w = find_chordless_cycle(cycle_graph(4))
    assert w.vertices == frozenset(range(4))
    assert find_chordless_cycle(complete_graph(5)) is None
    c6 = Graph.from_edges(6, list(cycle_graph(6).edges()) + [(0, 3)])
    w = find_chordless_cycle(c6)
    assert w is not None and len(w.cycle) == 4
    w.check(c6)


@settings(max_examples=150, deadline=None)
@given(st.integers(3, 9), st.integers(0, 10_000))
def test_chordless_cycle_finder_agrees_with_chordality(n, seed):
    g = random_outer_one_planar(n, seed).graph
    w = find_chordless_cycle(g)
    assert (w is None) == is_chordal(g)[0] == nx.is_chordal(nx.Graph(g.edges()))
    if w is not None:
        w.check(g)
    assert len(chordless_cycles(g)) == 0 if w is None else len(chordless_cycles(g)) >= 1


def test_witness_rejects_non_induced_cycles():
    with pytest.raises(GraphError):
        CycleWitness((0, 1, 2))
    with pytest.raises(GraphError):
        CycleWitness((0, 1, 2, 3)).check(complete_graph(4))


def test_structure_adjacent_gap():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    d = OuterDrawing(g, 1)
    r = check_structure(d, 0, 1, CycleWitness((0, 1, 2, 3)))
    assert r.adjacent and r.ok


def test_structure_non_adjacent_gap_finds_crossing():
    # U = 0-2-5-3 in drawing order 0,2,3,5: gap (3, 5) is non-adjacent and
    # the cycle edges 2-5 and 0-3 cross
    g = Graph.from_edges(6, [(0, 2), (2, 5), (5, 3), (3, 0), (3, 4), (0, 1)])
    d = OuterDrawing(g, 1)
    u = CycleWitness((0, 2, 5, 3))
    u.check(g)
    reports = {(r.u, r.w): r for r in structure_sweep(d, u)}
    gap = reports[(2, 3)]
    assert not gap.adjacent
    assert gap.crossing == ((2, 5), (0, 3))
    assert all(r.ok for r in reports.values())


def test_structure_preconditions():
    g = cycle_graph(6)
    d = OuterDrawing(g, 1)
    u = CycleWitness(tuple(range(6)))
    with pytest.raises(GraphError):
        check_structure(d, 0, 2, u)  # vertex 1 of U sits inside the arc
    with pytest.raises(GraphError):
        check_structure(OuterDrawing(g, 2), 0, 1, u)


def test_arcs():
    d = OuterDrawing(cycle_graph(6), 1)
    assert d.arc(1, 4) == [2, 3]
    assert d.arc(4, 1) == [5, 0]
    assert d.arc(4, 1, closed=True) == [4, 5, 0, 1]


def test_generator_contract():
    for seed in range(300):
        n = 3 + seed % 12
        d = random_outer_one_planar(n, seed)
        assert d.graph.n == n and d.graph.is_connected()
        assert validate_outer_k(d, 1)[0]
        assert random_outer_one_planar(n, seed) == d
    d = random_outer_one_planar(3, 7)
    assert crossing_pairs(d) == set()


def test_generator_plants_chordless_cycles_often():
    non_chordal = sum(not is_chordal(random_outer_one_planar(10, s).graph)[0] for s in range(200))
    assert non_chordal >= 80


def test_outer_robber_on_c4_survives():
    g = cycle_graph(4)
    d = OuterDrawing(g, 1)
    table = solve(g, 1)
    for s in range(4):
        t = simulate(g, OptimalCops(table, tiebreak="chase", seed=s), robber_policy_outer(d), 500)
        assert not t.outcome.captured


def test_outer_robber_refuses_chordal_graphs():
    with pytest.raises(GraphError):
        robber_policy_outer(OuterDrawing(complete_graph(4), 1))


def test_outer_robber_raises_when_cornered():
    g = cycle_graph(4)
    robber = OuterRobber(OuterDrawing(g, 1), CycleWitness((0, 1, 2, 3)))
    with pytest.raises(ClaimViolation):
        robber.place_robber(g, (0,)) and robber.move(g, [((1,), 1)])


def test_outer_robber_survives_corpus_sample():
    for seed in range(150):
        d = random_outer_one_planar(4 + seed % 10, seed)
        if is_chordal(d.graph)[0]:
            continue
        table = solve(d.graph, 1)
        t = simulate(d.graph, OptimalCops(table, tiebreak="chase", seed=seed), robber_policy_outer(d), 300)
        assert not t.outcome.captured
