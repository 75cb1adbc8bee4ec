"""Slow, obviously-correct k-cop game values, used as an oracle for the solver.

Plain value iteration over explicit positions; no ranking, no CSR, no numpy.
"""

from __future__ import annotations

import itertools

INF = float("inf")


def _closed(g, v):
    return (v, *g.adjacency[v])


def game_values(g, k):
    """(cop_time, robber_time): dicts from (sorted cops, robber) to half-moves left, INF = robber escapes."""
    configs = list(itertools.combinations_with_replacement(range(g.n), k))
    moves = {}
    for c in configs:
        moves[c] = {tuple(sorted(m)) for m in itertools.product(*(_closed(g, x) for x in c))}
    cop_t = {(c, r): (0 if r in c else INF) for c in configs for r in range(g.n)}
    rob_t = dict(cop_t)
    changed = True
    while changed:
        changed = False
        for (c, r), t in cop_t.items():
            if t == 0:
                continue
            best = 1 + min(rob_t[(m, r)] for m in moves[c])
            if best < t:
                cop_t[(c, r)] = best
                changed = True
        for (c, r), t in rob_t.items():
            if t == 0:
                continue
            worst = 1 + max(cop_t[(c, x)] for x in _closed(g, r))
            if worst < t:
                rob_t[(c, r)] = worst
                changed = True
    return cop_t, rob_t


def is_k_cop_win(g, k):
    cop_t, _ = game_values(g, k)
    configs = {c for c, _ in cop_t}
    return any(all(cop_t[(c, r)] < INF for r in range(g.n)) for c in configs)
