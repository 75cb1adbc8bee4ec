import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pursuit.game import GameState, Side
from pursuit.graph import Graph, complete_graph, cycle_graph, dismantling_order, path_graph, petersen_graph
from pursuit.solver import (
    UNRESOLVED,
    BudgetExceeded,
    ConfigIndex,
    OptimalCops,
    OptimalRobber,
    config_count,
    cop_number,
    solve,
)
from pursuit.strategies.simulate import check_transcript, simulate

from reference import INF, game_values


@st.composite
def connected_graphs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    edges = {(p, v) for v, p in enumerate(parents, start=1)}
    extra = list(itertools.combinations(range(n), 2))
    if extra:
        edges |= set(draw(st.lists(st.sampled_from(extra), unique=True, max_size=8)))
    return Graph.from_edges(n, edges)


def test_config_index_is_a_bijection():
    idx = ConfigIndex(6, 3)
    assert idx.count == config_count(6, 3) == len(idx.configs)
    seen = set()
    for r, c in enumerate(idx.configs):
        assert idx.rank(c) == r
        assert list(c) == sorted(c)
        seen.add(tuple(c))
    assert len(seen) == idx.count
    assert idx.rank([4, 0, 2]) == idx.rank([0, 2, 4])


@settings(max_examples=60, deadline=None)
@given(connected_graphs(), st.integers(1, 2))
def test_times_match_reference(g, k):
    table = solve(g, k)
    cop_t, rob_t = game_values(g, k)
    for (c, r), t in cop_t.items():
        expect = UNRESOLVED if t == INF else t
        assert table.cop_time[table.index.rank(c), r] == expect
        t2 = rob_t[(c, r)]
        assert table.robber_time[table.index.rank(c), r] == (UNRESOLVED if t2 == INF else t2)


def test_known_cop_numbers():
    assert cop_number(path_graph(9), 3) == 1
    assert cop_number(complete_graph(6), 3) == 1
    assert cop_number(cycle_graph(4), 3) == 2
    assert cop_number(cycle_graph(11), 3) == 2
    assert cop_number(petersen_graph(), 3) == 3
    assert cop_number(petersen_graph(), 2) is None


def test_monotone_in_k():
    rng = random.Random(1)
    for _ in range(40):
        n = rng.randint(2, 7)
        edges = {(v, rng.randrange(v)) for v in range(1, n)}
        edges |= {e for e in itertools.combinations(range(n), 2) if rng.random() < 0.3}
        g = Graph.from_edges(n, edges)
        wins = [solve(g, k).cop_win for k in (1, 2, 3)]
        assert wins == sorted(wins)
        # more cops never slow down capture from a shared position
        t1, t2 = solve(g, 1), solve(g, 2)
        for c in range(n):
            for r in range(n):
                a = t1.cop_time[c, r]
                b = t2.cop_time[t2.index.rank([c, c]), r]
                if a != UNRESOLVED:
                    assert b != UNRESOLVED and b <= a


def test_one_cop_win_matches_dismantling_small_exhaustive():
    # every labelled connected graph on up to 5 vertices
    for n in range(1, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            if not g.is_connected():
                continue
            assert (dismantling_order(g) is not None) == solve(g, 1).cop_win


def test_state_queries():
    g = cycle_graph(4)
    t = solve(g, 1)
    assert not t.cop_win
    assert t.label(GameState.of([0], 2, Side.COPS)) == "ROBBER_WIN"
    assert t.capture_time(GameState.of([0], 1, Side.COPS)) == 1
    assert t.capture_time(GameState.of([0], 0, Side.ROBBER)) == 0
    with pytest.raises(ValueError):
        t.is_cop_win(GameState.of([0, 1], 2, Side.COPS))
    assert t.state_count == 2 * 4 * 4


def test_budget_enforced(monkeypatch):
    with pytest.raises(BudgetExceeded):
        solve(petersen_graph(), 2, budget=100)
    monkeypatch.setenv("PURSUIT_BUDGET_STATES", "50")
    with pytest.raises(BudgetExceeded):
        solve(petersen_graph(), 1)


def test_optimal_play_realises_table_value():
    g = petersen_graph()
    table = solve(g, 3)
    cops = OptimalCops(table)
    robber = OptimalRobber(table)
    t = simulate(g, cops, robber, 100)
    assert t.outcome.captured
    assert not check_transcript(g, t)
    start = cops.place_cops(g)
    value = table.placement_value(table.index.rank(start))
    # the optimal robber picks the worst start, so play lasts exactly the table value
    assert t.half_moves == value


def test_optimal_cops_never_lose_a_won_position():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(3, 8)
        edges = {(v, rng.randrange(v)) for v in range(1, n)}
        edges |= {e for e in itertools.combinations(range(n), 2) if rng.random() < 0.3}
        g = Graph.from_edges(n, edges)
        table = solve(g, 2)
        if not table.cop_win:
            continue
        t = simulate(g, OptimalCops(table, tiebreak="chase"), OptimalRobber(table), 4 * n)
        assert t.outcome.captured


def test_robber_escapes_forever_on_robber_win():
    g = cycle_graph(5)
    table = solve(g, 1)
    for s in range(5):
        t = simulate(g, OptimalCops(table, tiebreak="chase", seed=s), OptimalRobber(table), 200)
        assert not t.outcome.captured


def test_tables_are_int32():
    t = solve(cycle_graph(6), 2)
    assert t.cop_time.dtype == np.int32 and t.robber_time.dtype == np.int32
