"""Three cops shrinking the robber's territory with guarded isometric paths.

One cop guards a shortest path between two diametral vertices. From then
on the robber lives in a *territory*: its component once the guarded paths
(and every edge crossing one of them) are removed. A free cop takes a new
path through the territory, isometric in the robber's playing field, and
guards it. When that guard holds, the robber's new territory is strictly
smaller, and any guard it no longer touches is released. Two guards at a
time are always enough on the graphs the strategy is meant for; needing a
third is reported as a :class:`ClaimViolation`.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Sequence

from ..constructions import KiteMap
from ..game import ClaimViolation, Side
from ..graph import Graph, all_pairs_distances, bfs_distances, shortest_path_avoiding
from .guard import GuardError, PathGuard, reachable_region

CLAIM = "three-cop capture"


def _diametral_pair(dist: list[list[int]]) -> tuple[int, int]:
    best = (-1, 0, 0)
    for v, row in enumerate(dist):
        for w in range(v + 1, len(row)):
            if row[w] > best[0]:
                best = (row[w], v, w)
    return best[1], best[2]


def _region_edges_graph(g: Graph, region: set[int]) -> Graph:
    """Edges with at least one endpoint in ``region``: the robber's field."""
    return Graph.from_edges(g.n, [e for e in g.edges() if e[0] in region or e[1] in region])


def _path_through(field: Graph, a: int, b: int, region: set[int]) -> list[int] | None:
    """Shortest a-b path whose interior lies in ``region`` (at least one interior vertex)."""
    parent = {a: a}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        for w in field.adjacency[u]:
            if w in parent:
                continue
            if w == b:
                if u == a:
                    continue
                path = [b, u]
                while path[-1] != a:
                    path.append(parent[path[-1]])
                return path[::-1]
            if w in region:
                parent[w] = u
                queue.append(w)
    return None


class ThreeCopPolicy:
    """Cop policy for three cops; cop ``i`` keeps index ``i`` for the whole game."""

    side = Side.COPS
    cops = 3

    def __init__(self, g: Graph, kites: KiteMap) -> None:
        if not g.is_connected():
            raise ValueError("graph must be connected")
        self.graph = g
        self.kites = kites
        self.dist = all_pairs_distances(g)
        v, w = _diametral_pair(self.dist)
        self.first_path = shortest_path_avoiding(g, v, w)
        ecc = [max(row) for row in self.dist]
        self.center = min(range(g.n), key=lambda x: (ecc[x], x))
        self.reset()

    def reset(self) -> None:
        self.guards: dict[int, PathGuard] = {}
        self.pending: tuple[int, PathGuard] | None = None
        self.territory: set[int] = set(range(self.graph.n))
        self.commits = 0

    # -- policy interface -------------------------------------------------

    def place_cops(self, g: Graph) -> tuple[int, ...]:
        self.reset()
        p = self.first_path
        self.pending = (0, PathGuard(g, self.kites, p))
        return (p[len(p) // 2], self.center, self.center)

    def place_robber(self, g: Graph, cops: tuple[int, ...]) -> int:
        raise TypeError("cop policy cannot place the robber")

    def move(self, g: Graph, history: Sequence) -> tuple[int, ...]:
        cops, robber = history[-1]
        if self.pending is None:
            self._plan(cops, robber)
        busy = dict(self.guards)
        if self.pending is not None:
            busy[self.pending[0]] = self.pending[1]
        nxt = []
        for i, c in enumerate(cops):
            if i in busy:
                nxt.append(busy[i].step(c, robber))
            else:
                nxt.append(self._chase(c, robber))
        if robber not in nxt and self.pending is not None:
            i, guard = self.pending
            if guard.stabilized(nxt[i], robber):
                self._commit(robber)
        return tuple(nxt)

    # -- strategy ---------------------------------------------------------

    def _chase(self, cop: int, robber: int) -> int:
        if cop == robber:
            return cop
        d = self.dist
        return min(self.graph.adjacency[cop], key=lambda x: (d[x][robber], x))

    def _paths(self) -> list[list[int]]:
        return [guard.path for guard in self.guards.values()]

    def _needed(self, guards: dict[int, PathGuard], robber: int, region: set[int]) -> dict[int, PathGuard]:
        """Smallest set of guards that still confines the robber to ``region``."""
        g, kites = self.graph, self.kites
        ids = sorted(guards)
        for size in range(len(ids) + 1):
            for keep in itertools.combinations(ids, size):
                paths = [guards[i].path for i in keep]
                if robber in {v for p in paths for v in p}:
                    continue
                if reachable_region(g, kites, paths, robber) == region:
                    return {i: guards[i] for i in keep}
        return dict(guards)

    def _commit(self, robber: int) -> None:
        i, guard = self.pending
        self.pending = None
        everyone = dict(self.guards)
        everyone[i] = guard
        region = reachable_region(self.graph, self.kites, [x.path for x in everyone.values()], robber, self.territory)
        self.guards = self._needed(everyone, robber, region)
        if len(self.guards) > 2:
            raise ClaimViolation(CLAIM, f"territory of {len(region)} vertices needs {len(self.guards)} guards")
        self.territory = region
        self.commits += 1

    def _plan(self, cops: Sequence[int], robber: int) -> None:
        g, kites = self.graph, self.kites
        free = [i for i in range(len(cops)) if i not in self.guards]
        if not free:
            raise ClaimViolation(CLAIM, "no free cop left")
        region = self.territory
        field = _region_edges_graph(g, region)
        kept = self._paths()
        attach = sorted({v for p in kept for v in p if any(w in region for w in g.adjacency[v])})
        candidates = []
        for a, b in itertools.combinations(attach, 2):
            path = _path_through(field, a, b, region)
            if path is not None:
                candidates.append(path)
        # a path from the boundary into the territory also shrinks it
        for a in attach:
            d = bfs_distances(field, a, region | {a})
            far = max(region, key=lambda x: (d[x], -x))
            if d[far] > 0:
                candidates.append(shortest_path_avoiding(field, a, far, set(range(g.n)) - region - {a}))
        best = None
        for path in candidates:
            try:
                guard = PathGuard(g, kites, path, region)
            except GuardError:
                continue
            worst = self._worst_split(path, region)
            if worst is None:
                continue
            key = (worst, len(path), path)
            if best is None or key < best[0]:
                best = (key, guard)
        if best is None:
            raise ClaimViolation(CLAIM, f"no guardable path splits a territory of {len(region)} vertices")
        guard = best[1]
        d = self.dist
        cop = min(free, key=lambda i: (min(d[cops[i]][p] for p in guard.path), i))
        self.pending = (cop, guard)

    def _worst_split(self, path: list[int], region: set[int]) -> int | None:
        """Largest piece left after guarding ``path``; None if some piece would need three guards."""
        g, kites = self.graph, self.kites
        paths = self._paths() + [path]
        rest = region - set(path)
        worst = 0
        while rest:
            start = min(rest)
            piece = reachable_region(g, kites, paths, start, region)
            rest -= piece
            fake = {i: _Stub(p) for i, p in enumerate(paths)}
            if len(self._needed(fake, start, piece)) > 2:
                return None
            worst = max(worst, len(piece))
        return worst


class _Stub:
    def __init__(self, path: list[int]) -> None:
        self.path = path


def three_cop_policy(g: Graph, kites: KiteMap) -> ThreeCopPolicy:
    return ThreeCopPolicy(g, kites)


__all__ = ["CLAIM", "ThreeCopPolicy", "three_cop_policy"]
