"""Guarding isometric paths, and the robber territory they cut out.

A guard keeps its cop at a path index inside the robber's *shadow
interval* ``[max_j (j - d(r, p_j)), min_j (j + d(r, p_j))]`` where ``d`` is
distance in the robber's playing field. Once there, every path vertex the
robber could step onto (or reach through an edge crossing a path edge,
thanks to the kite around the crossing) is within one cop move.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..constructions import KiteMap
from ..game import Side
from ..graph import UNREACHABLE, Graph, GraphError, bfs_distances, canonical_edge, shortest_path_avoiding

Edge = tuple[int, int]


class GuardError(GraphError):
    """The requested path cannot be guarded (not a path, not isometric, self-crossing)."""


def path_edges(path: Sequence[int]) -> list[Edge]:
    return [canonical_edge(a, b) for a, b in zip(path, path[1:])]


def field_graph(g: Graph, region: Iterable[int] | None, path: Sequence[int]) -> Graph:
    """The robber's playing field while confined to ``region``.

    Keeps every edge with an endpoint in ``region`` off the path, plus the
    path's own edges. Edges joining two boundary vertices are dropped: the
    robber can never use them without already standing on guarded ground.
    """
    if region is None:
        return g
    inside = set(region) - set(path)
    keep = set(path_edges(path))
    keep.update(e for e in g.edges() if e[0] in inside or e[1] in inside)
    return Graph.from_edges(g.n, keep)


class PathGuard:
    """One cop's guard duty on one path, with distances fixed at assignment."""

    def __init__(
        self,
        g: Graph,
        kites: KiteMap,
        path: Sequence[int],
        region: Iterable[int] | None = None,
        check_crossings: bool = True,
    ) -> None:
        path = list(path)
        if not path:
            raise GuardError("empty path")
        if len(set(path)) != len(path):
            raise GuardError("path repeats a vertex")
        for a, b in zip(path, path[1:]):
            if not g.has_edge(a, b):
                raise GuardError(f"{a}-{b} is not an edge")
        self.graph = g
        self.kites = kites
        self.path = path
        self.index = {v: i for i, v in enumerate(path)}
        self.field = field_graph(g, region, path)
        self.dist = [bfs_distances(self.field, p) for p in path]
        for i, row in enumerate(self.dist):
            for j, q in enumerate(path):
                if row[q] != abs(i - j):
                    raise GuardError(f"path is not isometric: d({path[i]},{q})={row[q]}, path gives {abs(i - j)}")
        if check_crossings:
            edges = path_edges(path)
            own = set(edges)
            for e in edges:
                p = kites.partner(*e)
                if p is not None and p in own:
                    raise GuardError(f"path edges {e} and {p} cross")
        self.crossing_edges = kites.edges_crossing(path_edges(path))
        self._entry: int | None = None

    @property
    def length(self) -> int:
        return len(self.path) - 1

    def interval(self, robber: int) -> tuple[int, int] | None:
        """Path indices where the cop holds the guard; None if the robber is off the field."""
        lo, hi = 0, self.length
        for j, row in enumerate(self.dist):
            d = row[robber]
            if d == UNREACHABLE:
                return None
            lo = max(lo, j - d)
            hi = min(hi, j + d)
        return lo, hi

    def stabilized(self, cop: int, robber: int) -> bool:
        if cop not in self.index:
            return False
        iv = self.interval(robber)
        return iv is not None and iv[0] <= self.index[cop] <= iv[1]

    def step(self, cop: int, robber: int) -> int:
        """Next cop position: capture if possible, else hold or approach the shadow."""
        g = self.graph
        if cop == robber or g.has_edge(cop, robber):
            return robber
        if cop in self.index:
            self._entry = None
            c = self.index[cop]
            iv = self.interval(robber)
            if iv is None:
                return cop
            target = min(max(c, iv[0]), iv[1])
            if target > c:
                return self.path[c + 1]
            if target < c:
                return self.path[c - 1]
            return cop
        if self._entry is None:
            d = bfs_distances(g, cop)
            self._entry = min(self.path, key=lambda p: (d[p], self.index[p]))
        route = shortest_path_avoiding(g, cop, self._entry)
        return route[1] if route and len(route) > 1 else cop


class _GuardPolicy:
    side = Side.COPS

    def __init__(self, guards: list[PathGuard], starts: list[int]) -> None:
        self.guards = guards
        self.starts = starts

    def place_cops(self, g: Graph) -> tuple[int, ...]:
        return tuple(self.starts)

    def place_robber(self, g: Graph, cops: tuple[int, ...]) -> int:
        raise TypeError("cop policy cannot place the robber")

    def move(self, g: Graph, history) -> tuple[int, ...]:
        cops, robber = history[-1]
        return tuple(guard.step(c, robber) for guard, c in zip(self.guards, cops))

    def stabilized(self, position) -> list[bool]:
        cops, robber = position
        return [guard.stabilized(c, robber) for guard, c in zip(self.guards, cops)]


def guard_path_policy(
    g: Graph, kites: KiteMap, path: Sequence[int], start: int | None = None, region: Iterable[int] | None = None
) -> _GuardPolicy:
    """One cop guarding ``path`` (must be isometric in the robber's field)."""
    guard = PathGuard(g, kites, path, region)
    return _GuardPolicy([guard], [path[len(path) // 2] if start is None else start])


def two_path_guard(
    g: Graph, kites: KiteMap, p1: Sequence[int], p2: Sequence[int], region: Iterable[int] | None = None
) -> _GuardPolicy:
    """Two cops on two internally disjoint u-v paths, the second isometric once the first is guarded."""
    if p1[0] != p2[0] or p1[-1] != p2[-1]:
        raise GuardError("paths must share both endpoints")
    if set(p1[1:-1]) & set(p2[1:-1]):
        raise GuardError("paths must be internally disjoint")
    cross = kites.edges_crossing(path_edges(p1))
    if cross & set(path_edges(p2)):
        raise GuardError("an edge of the first path crosses an edge of the second")
    base = set(range(g.n)) if region is None else set(region)
    first = PathGuard(g, kites, p1, region)
    if list(p1) == list(p2):
        # degenerate cycle: the cops simply hold both ends
        return _GuardPolicy([first, PathGuard(g, kites, p2, region)], [p1[0], p1[-1]])
    second = PathGuard(g, kites, p2, base - set(p1))
    return _GuardPolicy([first, second], [p1[len(p1) // 2], p2[len(p2) // 2]])


# -- territories ----------------------------------------------------------------


class TerritorySide(str, enum.Enum):
    INTERNAL = "INTERNAL"
    EXTERNAL = "EXTERNAL"


@dataclass(frozen=True)
class Territory:
    cycle: tuple[int, ...]
    side: TerritorySide
    vertices: frozenset[int]


def reachable_region(
    g: Graph,
    kites: KiteMap,
    guarded_paths: Iterable[Sequence[int]],
    start: int,
    within: Iterable[int] | None = None,
) -> set[int]:
    """Vertices the robber reaches from ``start`` without touching a guarded path or crossing one of its edges."""
    paths = [list(p) for p in guarded_paths]
    blocked_v = {v for p in paths for v in p}
    if start in blocked_v:
        raise GuardError(f"robber at {start} is on a guarded path")
    blocked_e = kites.edges_crossing(e for p in paths for e in path_edges(p))
    allowed = None if within is None else set(within)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w in seen or w in blocked_v or canonical_edge(u, w) in blocked_e:
                continue
            if allowed is not None and w not in allowed:
                continue
            seen.add(w)
            queue.append(w)
    return seen


def territory_split(
    g: Graph,
    kites: KiteMap,
    p1: Sequence[int],
    p2: Sequence[int],
    robber: int,
    reference: int | None = None,
) -> Territory:
    """Robber's component once the cycle p1 + p2 is guarded.

    The component is EXTERNAL when it contains ``reference`` (default: a
    vertex of the largest component off the cycle), INTERNAL otherwise.
    """
    if p1[0] != p2[0] or p1[-1] != p2[-1]:
        raise GuardError("paths must share both endpoints")
    cycle = tuple(p1) + tuple(reversed(p2[1:-1]))
    if robber in cycle:
        raise GuardError("robber is on the cycle")
    mine = reachable_region(g, kites, [p1, p2], robber)
    if reference is None:
        rest = set(range(g.n)) - set(cycle)
        comps = []
        while rest:
            comp = reachable_region(g, kites, [p1, p2], min(rest))
            comps.append(comp)
            rest -= comp
        reference = min(max(comps, key=len))
    side = TerritorySide.EXTERNAL if reference in mine else TerritorySide.INTERNAL
    return Territory(cycle, side, frozenset(mine))
