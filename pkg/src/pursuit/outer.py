"""Outer k-planar drawings: vertices on a convex curve in id order.

Two edges cross exactly when their endpoints interleave around the curve,
so a drawing is just a graph plus a crossing budget.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .game import ClaimViolation, Side
from .graph import Graph, GraphError, canonical_edge, shortest_path_avoiding

Edge = tuple[int, int]


def interleave(e: Edge, f: Edge) -> bool:
    """True when chords ``e`` and ``f`` of a convex polygon (vertex ids in order) cross."""
    a, b = e
    c, d = f
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def _crossings(edges: Sequence[Edge]) -> set[tuple[Edge, Edge]]:
    edges = sorted(canonical_edge(*e) for e in edges)
    out = set()
    for i, e in enumerate(edges):
        a, b = e
        for f in edges[i + 1 :]:
            if f[0] >= b:
                break
            if a < f[0] < b < f[1]:
                out.add((e, f))
    return out


@dataclass(frozen=True)
class OuterDrawing:
    graph: Graph
    k: int = 1

    def __post_init__(self) -> None:
        ok, counts = _validate(self.graph, self.k)
        if not ok:
            worst = max(counts, key=counts.get)
            raise GraphError(f"edge {worst} is crossed {counts[worst]} times, budget {self.k}")

    @property
    def n(self) -> int:
        return self.graph.n

    def arc(self, u: int, w: int, closed: bool = False) -> list[int]:
        """Vertices met going forward from ``u`` to ``w``: V[u,w] if closed, else V(u,w)."""
        n = self.graph.n
        out = []
        v = u if closed else (u + 1) % n
        stop = (w + 1) % n if closed else w
        while v != stop:
            out.append(v)
            v = (v + 1) % n
            if not closed and v == u:
                break
        return out


def crossing_pairs(d: OuterDrawing | Graph) -> set[tuple[Edge, Edge]]:
    """All crossing edge pairs ``(e, f)`` with ``e < f``."""
    g = d.graph if isinstance(d, OuterDrawing) else d
    return _crossings(g.edges())


def crossing_counts(g: Graph) -> dict[Edge, int]:
    counts = Counter({e: 0 for e in g.edges()})
    for e, f in _crossings(g.edges()):
        counts[e] += 1
        counts[f] += 1
    return dict(counts)


def _validate(g: Graph, k: int) -> tuple[bool, dict[Edge, int]]:
    counts = crossing_counts(g)
    return all(c <= k for c in counts.values()), counts


def validate_outer_k(d: OuterDrawing | Graph, k: int) -> tuple[bool, dict[Edge, int]]:
    """Whether every edge is crossed at most ``k`` times, with the per-edge counts."""
    g = d.graph if isinstance(d, OuterDrawing) else d
    return _validate(g, k)


# -- chordless cycles -----------------------------------------------------------


@dataclass(frozen=True)
class CycleWitness:
    """An induced cycle: ``cycle`` in traversal order, ``order`` in drawing order."""

    cycle: tuple[int, ...]
    order: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        if len(self.cycle) < 4 or len(set(self.cycle)) != len(self.cycle):
            raise GraphError("a witness needs at least four distinct vertices")
        object.__setattr__(self, "order", tuple(sorted(self.cycle)))

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.cycle)

    def check(self, g: Graph) -> None:
        u = self.vertices
        m = len(self.cycle)
        want = {canonical_edge(self.cycle[i], self.cycle[(i + 1) % m]) for i in range(m)}
        have = {e for e in g.edges() if e[0] in u and e[1] in u}
        if want != have:
            raise GraphError("vertex set does not induce exactly this cycle")

    def cycle_edges_at(self, v: int) -> list[Edge]:
        i = self.cycle.index(v)
        m = len(self.cycle)
        return [canonical_edge(v, self.cycle[i - 1]), canonical_edge(v, self.cycle[(i + 1) % m])]

    def gaps(self) -> list[tuple[int, int]]:
        """Pairs (u, w) of U-vertices consecutive in drawing order, wrapping around."""
        o = self.order
        return [(o[i], o[(i + 1) % len(o)]) for i in range(len(o))]


def find_chordless_cycle(g: Graph) -> CycleWitness | None:
    """A chordless cycle of length at least four, or None when ``g`` is chordal."""
    for v in range(g.n):
        nbrs = g.adjacency[v]
        closed = {v, *nbrs}
        for a, b in itertools.combinations(nbrs, 2):
            if g.has_edge(a, b):
                continue
            path = shortest_path_avoiding(g, a, b, closed - {a, b})
            if path is not None:
                return CycleWitness((v, *path))
    return None


def chordless_cycles(g: Graph, limit: int | None = None) -> list[CycleWitness]:
    """Every chordless cycle of length at least four, each listed once.

    Grows induced paths from their smallest vertex ``s``; a path closes into
    a cycle when its last vertex is adjacent to ``s``. The second vertex is
    kept below the last one so each cycle appears in one direction only.
    """
    out: list[CycleWitness] = []
    adj = g.neighbor_set

    def grow(path: list[int], blocked: set[int]) -> bool:
        s, last = path[0], path[-1]
        for x in g.adjacency[last]:
            if x <= s or x in blocked:
                continue
            if adj(x) & set(path[1:-1]):
                continue
            if s in adj(x):
                if len(path) >= 3 and path[1] < x:
                    out.append(CycleWitness((*path, x)))
                    if limit is not None and len(out) >= limit:
                        return True
                continue
            path.append(x)
            blocked.add(x)
            if grow(path, blocked):
                return True
            path.pop()
            blocked.discard(x)
        return False

    for s in range(g.n):
        for a in g.adjacency[s]:
            if a > s and grow([s, a], {s, a}):
                return out
    return out


# -- structure around a chordless cycle --------------------------------------------


@dataclass(frozen=True)
class StructureReport:
    u: int
    w: int
    adjacent: bool
    crossing: tuple[Edge, Edge] | None
    attachments: tuple[int, ...]

    @property
    def crossing_ok(self) -> bool:
        return self.adjacent or self.crossing is not None

    @property
    def attachments_ok(self) -> bool:
        return len(self.attachments) <= 3

    @property
    def ok(self) -> bool:
        return self.crossing_ok and self.attachments_ok


def arc_attachments(d: OuterDrawing, u: int, w: int) -> tuple[int, ...]:
    """Vertices outside the open arc V(u,w) with a neighbor inside it."""
    inside = set(d.arc(u, w))
    g = d.graph
    return tuple(sorted({x for v in inside for x in g.adjacency[v] if x not in inside}))


def check_structure(d: OuterDrawing, u: int, w: int, U: CycleWitness) -> StructureReport:
    """Check the crossing and attachment facts for a gap (u, w) of ``U``."""
    if d.k != 1:
        raise GraphError("structure checks need an outer 1-planar drawing")
    U.check(d.graph)
    members = U.vertices
    if u not in members or w not in members or u == w:
        raise GraphError("u and w must be distinct vertices of U")
    if set(d.arc(u, w)) & members:
        raise GraphError(f"V({u},{w}) contains vertices of U")
    g = d.graph
    adjacent = g.has_edge(u, w)
    crossing = None
    if not adjacent:
        for e in U.cycle_edges_at(u):
            for f in U.cycle_edges_at(w):
                if interleave(e, f):
                    crossing = (e, f)
                    break
            if crossing:
                break
    return StructureReport(u, w, adjacent, crossing, arc_attachments(d, u, w))


def structure_sweep(d: OuterDrawing, U: CycleWitness) -> list[StructureReport]:
    return [check_structure(d, u, w, U) for u, w in U.gaps()]


# -- robber strategy against one cop -----------------------------------------------


class OuterRobber:
    """Robber on a chordless cycle that only moves to restore its two invariants.

    With the cop on the cycle, the robber sits on the cycle outside the cop's
    closed neighborhood. With the cop in the open arc between two
    drawing-consecutive cycle vertices, the robber sits on a cycle vertex
    with no neighbor in that arc.
    """

    side = Side.ROBBER

    def __init__(self, d: OuterDrawing, U: CycleWitness) -> None:
        U.check(d.graph)
        self.drawing = d
        self.witness = U
        g = d.graph
        self._arc_of: dict[int, frozenset[int]] = {}
        self._touching: dict[int, frozenset[int]] = {}
        for u, w in U.gaps():
            arc = frozenset(d.arc(u, w))
            touching = frozenset(x for x in U.cycle if any(y in arc for y in g.adjacency[x]))
            for v in arc:
                self._arc_of[v] = arc
                self._touching[v] = touching
        self.moves = 0

    def _safe(self, cop: int, r: int) -> bool:
        g = self.drawing.graph
        if r not in self.witness.vertices:
            return False
        if cop in self.witness.vertices:
            return r != cop and not g.has_edge(cop, r)
        return r not in self._touching[cop]

    def place_cops(self, g: Graph) -> tuple[int, ...]:
        raise TypeError("robber policy cannot place cops")

    def place_robber(self, g: Graph, cops: tuple[int, ...]) -> int:
        (cop,) = cops
        for r in self.witness.order:
            if self._safe(cop, r):
                return r
        raise ClaimViolation("outer robber", f"no safe start on {self.witness.cycle} with the cop at {cop}")

    def move(self, g: Graph, history: Sequence) -> int:
        (cop,), r = history[-1]
        if self._safe(cop, r):
            return r
        for x in sorted(y for y in g.adjacency[r] if y in self.witness.vertices):
            if self._safe(cop, x):
                self.moves += 1
                return x
        raise ClaimViolation("outer robber", f"robber at {r}, cop at {cop}: no invariant-restoring step")


def robber_policy_outer(d: OuterDrawing, U: CycleWitness | None = None) -> OuterRobber:
    if U is None:
        U = find_chordless_cycle(d.graph)
        if U is None:
            raise GraphError("graph is chordal: no chordless cycle to run on")
    return OuterRobber(d, U)


# -- corpus -------------------------------------------------------------------------


def random_outer_one_planar(n: int, seed: int) -> OuterDrawing:
    """Random connected outer 1-planar drawing, deterministic in ``seed``.

    Every other drawing (by a seeded coin) plants a chordless cycle and keeps
    it chordless. Edges are proposed in random order and rejected when they
    would put a second crossing on any edge.
    """
    if n < 3:
        raise GraphError("need at least three vertices")
    rng = random.Random(seed)
    edges: set[Edge] = set()
    crossed: Counter = Counter()
    planted: set[int] = set()
    if n >= 4 and rng.random() < 0.5:
        planted = set(rng.sample(range(n), rng.randint(4, n)))

    def try_add(e: Edge) -> bool:
        if e in edges:
            return False
        if e[0] in planted and e[1] in planted:
            return False
        hits = [f for f in edges if interleave(e, f)]
        if len(hits) > 1 or any(crossed[f] for f in hits):
            return False
        edges.add(e)
        for f in hits:
            crossed[f] += 1
            crossed[e] += 1
        return True

    if planted:
        ring = sorted(planted)
        for a, b in zip(ring, ring[1:] + ring[:1]):
            edges.add(canonical_edge(a, b))
    target = rng.randint(n - 1, 2 * n)
    pool = list(itertools.combinations(range(n), 2))
    rng.shuffle(pool)
    for e in pool:
        if len(edges) >= target:
            break
        try_add(e)
    # boundary edges never cross anything, so they can always glue components
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        parent[find(a)] = find(b)
    for i in rng.sample(range(n), n):
        a, b = canonical_edge(i, (i + 1) % n)
        if find(a) != find(b):
            edges.add((a, b))
            parent[find(a)] = find(b)
    return OuterDrawing(Graph.from_edges(n, edges), 1)
