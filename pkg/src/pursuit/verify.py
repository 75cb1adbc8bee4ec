"""Verification suites behind ``pursuit verify`` and the acceptance tests.

Each suite returns a list of :class:`Verdict`; a suite passes when every
verdict does. Sizes default to the full acceptance workloads and can be
scaled down for quick runs.
"""

from __future__ import annotations

import functools
import random
import time
from dataclasses import dataclass
from typing import Callable, Iterable

from .constructions import (
    EmbeddedGraph,
    KiteMap,
    add_kite_diagonals,
    dodecahedron,
    kite_instances,
    one_planarize,
    petersen_two_planar_drawing,
    quadrangulate,
    subdivide_uniform,
    triangulate_pentagons,
)
from .game import ClaimViolation
from .graph import Graph, all_pairs_distances, cycle_graph, dismantling_order, is_chordal, petersen_graph
from .outer import chordless_cycles, find_chordless_cycle, random_outer_one_planar, robber_policy_outer, structure_sweep
from .solver import OptimalCops, OptimalRobber, cop_number, solve
from .strategies.escape import EscapeRobber
from .strategies.pairwise import SubsetRobber
from .strategies.simulate import check_transcript, simulate
from .strategies.three_cops import ThreeCopPolicy


def _first(items: list) -> str:
    return f"; first: {items[0]}" if items else ""


@dataclass(frozen=True)
class Verdict:
    name: str
    passed: bool
    detail: str

    def __str__(self) -> str:
        return f"VERDICT {self.name} {'PASS' if self.passed else 'FAIL'} {self.detail}"


@functools.cache
def dodecahedral_family() -> tuple[EmbeddedGraph, EmbeddedGraph, EmbeddedGraph, Graph, KiteMap]:
    """D, T, Q and Q' (with its crossings)."""
    d = dodecahedron()
    t = triangulate_pentagons(d)
    q = quadrangulate(t)
    qp, kites = add_kite_diagonals(q)
    return d, t, q, qp, kites


def random_tree(n: int, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(v, rng.randrange(v)) for v in range(1, n)])


def random_connected_graph(n: int, rng: random.Random, p: float | None = None) -> Graph:
    """Random spanning tree plus each other pair independently with probability ``p``."""
    p = rng.random() if p is None else p
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, edges)


# -- solver oracle ----------------------------------------------------------


def verify_oracle(trees: int = 50, graphs: int = 10_000, seed: int = 0) -> list[Verdict]:
    rng = random.Random(seed)
    out = []
    bad = [n for n in range(1, trees + 1) if cop_number(random_tree(rng.randint(1, 30), rng), 3) != 1]
    out.append(Verdict("oracle.trees", not bad, f"{trees} random trees, {len(bad)} not cop-win"))
    bad = [n for n in range(4, 13) if cop_number(cycle_graph(n), 3) != 2]
    out.append(Verdict("oracle.cycles", not bad, f"C4..C12 cop number 2; failures {bad}"))
    c = cop_number(petersen_graph(), 3)
    out.append(Verdict("oracle.petersen", c == 3, f"cop number {c}"))
    mismatch = 0
    for _ in range(graphs):
        g = random_connected_graph(rng.randint(1, 8), rng)
        if (dismantling_order(g) is not None) != solve(g, 1).cop_win:
            mismatch += 1
    out.append(Verdict("oracle.dismantling", mismatch == 0, f"{graphs} graphs n<=8, {mismatch} mismatches"))
    return out


# -- lower bounds on the dodecahedral family ------------------------------------


def _escape_runs(play: Graph, table, robber: Callable[[], EscapeRobber], seeds: int, rounds: int) -> tuple[int, int, str]:
    """(survived, claim violations, first problem) over seeds x both cop tie-breaks."""
    survived = violations = 0
    first = ""
    for tiebreak in ("lex", "chase"):
        for s in range(seeds):
            try:
                t = simulate(play, OptimalCops(table, tiebreak=tiebreak, seed=s), robber(), rounds)
            except ClaimViolation as exc:
                violations += 1
                first = first or f"seed {s}/{tiebreak}: {exc}"
                continue
            if t.outcome.captured:
                first = first or f"seed {s}/{tiebreak}: {t.outcome}"
            else:
                survived += 1
    return survived, violations, first


def verify_thm2(seeds: int = 20, rounds: int = 10_000, budget: int | None = None) -> list[Verdict]:
    _, _, q, _, _ = dodecahedral_family()
    g = q.graph
    counts = (g.n, g.m, len(q.faces))
    out = [Verdict("thm2.counts", counts == (182, 360, 180), f"Q (n, m, faces) = {counts}")]
    start = time.perf_counter()
    table = solve(g, 2, budget=budget)
    wins = table.winning_placements().size
    out.append(
        Verdict(
            "thm2.solve",
            wins == 0,
            f"k=2: {wins} winning cop placements of {table.index.count}, {time.perf_counter() - start:.1f}s",
        )
    )
    ok, cv, first = _escape_runs(g, table, lambda: EscapeRobber(q), seeds, rounds)
    total = 2 * seeds
    out.append(Verdict("thm2.escape", ok == total and cv == 0, f"{ok}/{total} survived {rounds} rounds, {cv} claim violations {first}".rstrip()))
    return out


def shortest_path_crossing(g: Graph, kites: KiteMap, dist: list[list[int]], s: int, t: int):
    """A crossing pair whose two edges lie together on some shortest s-t path, or None."""
    ds, dt, total = dist[s], dist[t], dist[s][t]
    for pair in kites.crossings:
        e, f = tuple(pair)
        for a, b in (e, e[::-1]):
            if ds[a] + 1 + dt[b] != total:
                continue
            for x, y in (f, f[::-1]):
                if ds[a] + 1 + dist[b][x] + 1 + dt[y] == total or ds[x] + 1 + dist[y][a] + 1 + dt[b] == total:
                    return e, f
    return None


def verify_lemma2(pairs: int = 1000, seed: int = 0) -> Verdict:
    _, _, _, qp, kites = dodecahedral_family()
    dist = all_pairs_distances(qp)
    rng = random.Random(seed)
    hits = []
    for _ in range(pairs):
        s, t = rng.sample(range(qp.n), 2)
        hit = shortest_path_crossing(qp, kites, dist, s, t)
        if hit:
            hits.append((s, t, hit))
    return Verdict("thm3.lemma2", not hits, f"{pairs} random pairs, {len(hits)} with crossing edges on a shortest path" + _first(hits))


def verify_thm3(seeds: int = 20, rounds: int = 10_000, budget: int | None = None, pairs: int = 1000) -> list[Verdict]:
    _, _, q, qp, kites = dodecahedral_family()
    out = [Verdict("thm3.counts", qp.m == 4 * qp.n - 8 == 720, f"Q' n={qp.n} m={qp.m} crossings={len(kites.crossings)}")]
    start = time.perf_counter()
    table = solve(qp, 2, budget=budget)
    wins = table.winning_placements().size
    out.append(
        Verdict(
            "thm3.solve",
            wins == 0,
            f"k=2: {wins} winning cop placements of {table.index.count}, {time.perf_counter() - start:.1f}s",
        )
    )
    ok, cv, first = _escape_runs(qp, table, lambda: EscapeRobber(q, qp), seeds, rounds)
    total = 2 * seeds
    out.append(Verdict("thm3.escape", ok == total and cv == 0, f"{ok}/{total} survived {rounds} rounds, {cv} claim violations {first}".rstrip()))
    out.append(verify_lemma2(pairs))
    return out


# -- upper bound ----------------------------------------------------------------------


def _three_cop_run(name: str, g: Graph, kites: KiteMap, robber, horizon_factor: int) -> tuple[bool, str]:
    policy = ThreeCopPolicy(g, kites)
    horizon = horizon_factor * g.n
    try:
        t = simulate(g, policy, robber, horizon)
    except ClaimViolation as exc:
        return False, f"{name}: {exc}"
    problems = check_transcript(g, t)
    if problems:
        return False, f"{name}: illegal transcript {problems[0]}"
    if not t.outcome.captured:
        return False, f"{name}: {t.outcome} within {horizon} rounds\n{t.to_text()}"
    return True, f"{name}: {t.outcome}"


def verify_thm5(horizon_factor: int = 50, budget: int | None = None, exact_q: bool = False) -> list[Verdict]:
    out = []
    fails, worst = [], 0
    instances = kite_instances()
    for name, g, kites in instances:
        table = solve(g, 3, budget=budget)
        ok, detail = _three_cop_run(name, g, kites, OptimalRobber(table), horizon_factor)
        if ok:
            worst = max(worst, int(detail.rsplit("(", 1)[1].rstrip(")")))
        else:
            fails.append(detail)
    out.append(
        Verdict(
            "thm5.kite_instances",
            not fails,
            f"{len(instances) - len(fails)}/{len(instances)} captured the optimal robber, slowest round {worst}"
            + (f"; {fails[0]}" if fails else ""),
        )
    )
    _, _, q, qp, kites = dodecahedral_family()
    pair_table = solve(qp, 2, budget=budget)
    ok, detail = _three_cop_run("Q'", qp, kites, SubsetRobber(pair_table, 3), horizon_factor)
    out.append(Verdict("thm5.qprime", ok, detail + " (robber scored by the exact two-cop table)"))
    if exact_q:
        start = time.perf_counter()
        table = solve(q.graph, 3, budget=budget)
        out.append(Verdict("thm5.exact_q", table.cop_win, f"k=3 on Q: cop_win={table.cop_win}, {time.perf_counter() - start:.0f}s"))
    return out


# -- subdivision pipeline ---------------------------------------------------------------


def verify_subdivision(graphs: int = 1000, seed: int = 0, budget: int | None = None) -> list[Verdict]:
    out = []
    drawing = petersen_two_planar_drawing()
    g, cert = one_planarize(drawing)
    table = solve(g, 2, budget=budget)
    out.append(
        Verdict(
            "subdivision.petersen",
            drawing.k == 2 and cert.max_crossings <= 1 and g.n == 40 and not table.cop_win,
            f"drawing k={drawing.k}, n={g.n}, max crossings per sub-edge {cert.max_crossings}, "
            f"2 cops {'win' if table.cop_win else 'lose'}",
        )
    )
    rng = random.Random(seed)
    bad = []
    for i in range(graphs):
        h = random_connected_graph(rng.randint(2, 8), rng)
        s = rng.choice((0, 2, 4))
        c = cop_number(h, 3)
        sub = subdivide_uniform(h, s)
        # c(sub) >= c(h) means c(h) - 1 cops still lose on the subdivision
        if c > 1 and solve(sub, c - 1, budget=budget).cop_win:
            bad.append((i, s))
    out.append(Verdict("subdivision.monotone", not bad, f"{graphs} random graphs, {len(bad)} decreases" + _first(bad)))
    return out


# -- outer 1-planar ----------------------------------------------------------------------


def outer_corpus(size: int, seed: int = 0, max_n: int = 14) -> Iterable:
    for i in range(size):
        s = seed + i
        yield s, random_outer_one_planar(3 + s % (max_n - 2), s)


def verify_thm6(size: int = 10_000, rounds: int = 1000, seed: int = 0) -> list[Verdict]:
    mismatch, over, survived, escapes, cv = [], [], 0, 0, []
    for s, d in outer_corpus(size, seed):
        g = d.graph
        chordal, _ = is_chordal(g)
        one = solve(g, 1)
        c = 1 if one.cop_win else (2 if solve(g, 2).cop_win else None)
        if chordal != (c == 1):
            mismatch.append(s)
        if c is None:
            over.append(s)
        if chordal:
            continue
        escapes += 1
        try:
            t = simulate(g, OptimalCops(one, tiebreak="chase", seed=s), robber_policy_outer(d), rounds)
        except ClaimViolation as exc:
            cv.append((s, str(exc)))
            continue
        if t.outcome.captured:
            cv.append((s, str(t.outcome)))
        else:
            survived += 1
    return [
        Verdict("thm6.chordal_iff_copwin", not mismatch, f"{size} drawings, {len(mismatch)} mismatches" + _first(mismatch)),
        Verdict("thm6.at_most_two", not over, f"{size} drawings, {len(over)} need more than two cops"),
        Verdict("thm6.robber", survived == escapes, f"{survived}/{escapes} non-chordal drawings survived {rounds} rounds" + _first(cv)),
    ]


def verify_prop1(size: int = 10_000, seed: int = 0) -> list[Verdict]:
    triples = crossing_bad = attach_bad = witness_bad = 0
    first = ""
    for s, d in outer_corpus(size, seed):
        cycles = chordless_cycles(d.graph)
        if (find_chordless_cycle(d.graph) is None) != (not cycles):
            witness_bad += 1
        for u in cycles:
            for r in structure_sweep(d, u):
                triples += 1
                if not r.crossing_ok:
                    crossing_bad += 1
                    first = first or f"seed {s} U={u.cycle} gap {r.u},{r.w}"
                if not r.attachments_ok:
                    attach_bad += 1
                    first = first or f"seed {s} U={u.cycle} gap {r.u},{r.w} attachments {r.attachments}"
    return [
        Verdict("prop1.crossing", crossing_bad == 0, f"{triples} (U,u,w) triples, {crossing_bad} violations {first}".rstrip()),
        Verdict("cor1.attachments", attach_bad == 0, f"{triples} (U,u,w) triples, {attach_bad} violations"),
        Verdict("outer.witness", witness_bad == 0, f"{size} drawings, {witness_bad} finder/enumerator disagreements"),
    ]


SUITES: dict[str, Callable[..., list[Verdict]]] = {
    "oracle": verify_oracle,
    "thm2": verify_thm2,
    "thm3": verify_thm3,
    "thm5": verify_thm5,
    "thm6": verify_thm6,
    "prop1": verify_prop1,
    "subdivision": verify_subdivision,
}
