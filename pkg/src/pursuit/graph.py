"""Simple undirected graphs and the classical decision procedures used by the game code.

Vertices are dense integer ids ``0..n-1``. Every function here is pure; a
:class:`Graph` never changes after construction.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

UNREACHABLE = -1


class GraphError(ValueError):
    """Raised for malformed graphs or violated preconditions."""


def canonical_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    _neighbor_sets: tuple[frozenset[int], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.n:
            raise GraphError(f"adjacency has {len(self.adjacency)} rows for n={self.n}")
        sets = []
        for v, nbrs in enumerate(self.adjacency):
            s = frozenset(nbrs)
            if len(s) != len(nbrs):
                raise GraphError(f"duplicate neighbor at vertex {v}")
            if v in s:
                raise GraphError(f"self-loop at vertex {v}")
            if any(u < 0 or u >= self.n for u in nbrs):
                raise GraphError(f"neighbor id out of range at vertex {v}")
            if list(nbrs) != sorted(nbrs):
                raise GraphError(f"adjacency of vertex {v} is not ascending")
            sets.append(s)
        for v, s in enumerate(sets):
            for u in s:
                if v not in sets[u]:
                    raise GraphError(f"asymmetric adjacency {v}->{u}")
        object.__setattr__(self, "_neighbor_sets", tuple(sets))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph, rejecting loops and out-of-range ids; duplicate edges collapse."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"self-loop ({u},{v})")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._neighbor_sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """Canonical ``(min, max)`` edges in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def induced(self, keep: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..len(keep)-1``; returns it with the old ids."""
        old = sorted(set(keep))
        index = {v: i for i, v in enumerate(old)}
        edges = [
            (index[u], index[v])
            for u in old
            for v in self.adjacency[u]
            if v in index and u < v
        ]
        return Graph.from_edges(len(old), edges), old

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> "Graph":
        drop = {canonical_edge(u, v) for u, v in removed}
        return Graph.from_edges(self.n, [e for e in self.edges() if e not in drop])

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return UNREACHABLE not in bfs_distances(self, 0)

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] != -1:
                continue
            color[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if color[w] == -1:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        return False
        return True


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# -- distances ---------------------------------------------------------------


def bfs_distances(
    g: Graph, src: int, allowed: frozenset[int] | set[int] | None = None
) -> list[int]:
    """Edge-count distances from ``src``; unreachable vertices get ``UNREACHABLE``.

    With ``allowed`` the search runs in the subgraph induced by that vertex set.
    """
    if not 0 <= src < g.n:
        raise GraphError(f"source {src} out of range")
    dist = [UNREACHABLE] * g.n
    dist[src] = 0
    queue = deque([src])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] == UNREACHABLE and (allowed is None or w in allowed):
                dist[w] = du
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> list[list[int]]:
    return [bfs_distances(g, s) for s in range(g.n)]


def closed_ball(g: Graph, v: int, r: int) -> set[int]:
    """Vertices within distance ``r`` of ``v`` (N[v] for r=1, N^2[v] for r=2)."""
    if r < 0:
        raise GraphError("radius must be non-negative")
    ball = {v}
    frontier = {v}
    for _ in range(r):
        frontier = {w for u in frontier for w in g.adjacency[u]} - ball
        ball |= frontier
    return ball


def shortest_path_avoiding(
    g: Graph, u: int, v: int, forbidden: Iterable[int] = ()
) -> list[int] | None:
    """Shortest u-v path in ``g`` minus ``forbidden``; ``None`` when disconnected there.

    Ties resolve toward lower vertex ids because BFS scans ascending adjacency.
    """
    blocked = set(forbidden)
    if u in blocked or v in blocked:
        raise GraphError("path endpoints may not be forbidden")
    if u == v:
        return [u]
    parent = {u: u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if y in parent or y in blocked:
                continue
            parent[y] = x
            if y == v:
                path = [v]
                while path[-1] != u:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(y)
    return None


def is_isometric_path(g: Graph, path: Sequence[int], allowed: set[int] | None = None) -> bool:
    """True when consecutive vertices are adjacent and every pair sits at path distance."""
    if len(set(path)) != len(path):
        return False
    if any(not g.has_edge(a, b) for a, b in zip(path, path[1:])):
        return False
    for i, p in enumerate(path):
        d = bfs_distances(g, p, allowed)
        if any(d[q] != abs(i - j) for j, q in enumerate(path)):
            return False
    return True


# -- chordality and dismantling ----------------------------------------------


@dataclass(frozen=True)
class EliminationOrder:
    order: tuple[int, ...]


@dataclass(frozen=True)
class DismantlingOrder:
    order: tuple[int, ...]
    # witness[i] dominates order[i] at its elimination time; the last vertex has none
    witness: tuple[int | None, ...]


def maximum_cardinality_search(g: Graph) -> list[int]:
    """Visit order of MCS (highest count of visited neighbors first, lowest id on ties)."""
    weight = [0] * g.n
    visited = [False] * g.n
    order = []
    for _ in range(g.n):
        best = -1
        for v in range(g.n):
            if not visited[v] and (best < 0 or weight[v] > weight[best]):
                best = v
        visited[best] = True
        order.append(best)
        for w in g.adjacency[best]:
            if not visited[w]:
                weight[w] += 1
    return order


def is_perfect_elimination_order(g: Graph, order: Sequence[int]) -> bool:
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in g.adjacency[v] if position[w] > position[v]]
        for a, b in combinations(later, 2):
            if not g.has_edge(a, b):
                return False
    return True


def is_chordal(g: Graph) -> tuple[bool, EliminationOrder | None]:
    """Chordality test: MCS order reversed must be a perfect elimination order."""
    peo = maximum_cardinality_search(g)[::-1]
    if is_perfect_elimination_order(g, peo):
        return True, EliminationOrder(tuple(peo))
    return False, None


def _dominator(g: Graph, v: int, alive: set[int]) -> int | None:
    ball = (g.neighbor_set(v) & alive) | {v}
    for u in sorted(g.neighbor_set(v) & alive):
        if ball <= (g.neighbor_set(u) & alive) | {u}:
            return u
    return None


def dismantling_order(g: Graph) -> DismantlingOrder | None:
    """Greedy removal of dominated vertices, lowest id first; ``None`` if the graph is not cop-win."""
    if g.n == 0:
        raise GraphError("empty graph has no dismantling order")
    if not g.is_connected():
        raise GraphError("dismantling requires a connected graph")
    alive = set(range(g.n))
    order: list[int] = []
    witness: list[int | None] = []
    while len(alive) > 1:
        for v in sorted(alive):
            dom = _dominator(g, v, alive)
            if dom is not None:
                order.append(v)
                witness.append(dom)
                alive.remove(v)
                break
        else:
            return None
    order.append(alive.pop())
    witness.append(None)
    return DismantlingOrder(tuple(order), tuple(witness))


def verify_dismantling(g: Graph, d: DismantlingOrder) -> bool:
    if sorted(d.order) != list(range(g.n)):
        return False
    alive = set(range(g.n))
    for v, w in zip(d.order[:-1], d.witness[:-1]):
        if w is None or w not in alive or w == v:
            return False
        ball_v = (g.neighbor_set(v) & alive) | {v}
        if not ball_v <= (g.neighbor_set(w) & alive) | {w}:
            return False
        alive.remove(v)
    return True


# -- connectivity ------------------------------------------------------------


def _connected_without(g: Graph, removed: set[int]) -> bool:
    rest = [v for v in range(g.n) if v not in removed]
    if not rest:
        return True
    allowed = set(rest)
    dist = bfs_distances(g, rest[0], allowed)
    return all(dist[v] != UNREACHABLE for v in rest)


def connectivity_at_least(g: Graph, c: int) -> bool:
    """True iff no vertex cut of size < c exists, by exhaustive cut enumeration."""
    if g.n <= c:
        raise GraphError(f"need n > {c} to test {c}-connectivity")
    for size in range(c):
        for cut in combinations(range(g.n), size):
            if not _connected_without(g, set(cut)):
                return False
    return True
