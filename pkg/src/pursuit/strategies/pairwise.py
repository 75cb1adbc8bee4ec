"""A robber for k cops built from a solved (k-1)-cop table.

Exact k-cop tables get out of reach quickly. This robber scores each
candidate step by the shortest optimal capture time any (k-1)-subset of
the cops could achieve from there, and picks the step that maximises it.
It is a heuristic opponent, not an optimal one.
"""

from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np

from ..game import Side
from ..graph import Graph
from ..solver import UNRESOLVED, GameTable

_INF = 1 << 40
_CAP = 1 << 20


class SubsetRobber:
    side = Side.ROBBER

    def __init__(self, table: GameTable, cops: int) -> None:
        if cops <= table.k:
            raise ValueError("table must be for fewer cops than the game")
        self.table = table
        self.cops = cops

    def _best(self, cops: Sequence[int], options: Sequence[int]) -> int:
        t = self.table
        opts = list(options)
        worst = np.full(len(opts), _INF, dtype=np.int64)
        total = np.zeros(len(opts), dtype=np.int64)
        for group in itertools.combinations(sorted(cops), t.k):
            times = t.cop_time[t.index.rank(group), opts].astype(np.int64)
            times = np.where(times == UNRESOLVED, _INF, times)
            worst = np.minimum(worst, times)
            total += np.minimum(times, _CAP)
        worst[[v in cops for v in opts]] = -1
        # maximise the fastest subset capture, then the summed times; lowest id last
        order = np.lexsort((np.asarray(opts), -total, -worst))
        return int(opts[order[0]])

    def place_cops(self, g: Graph) -> tuple[int, ...]:
        raise TypeError("robber policy cannot place cops")

    def place_robber(self, g: Graph, cops: tuple[int, ...]) -> int:
        return self._best(cops, range(g.n))

    def move(self, g: Graph, history: Sequence) -> int:
        cops, robber = history[-1]
        return self._best(cops, (robber, *g.adjacency[robber]))
