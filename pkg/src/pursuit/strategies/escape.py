"""Two-cop escape on the dodecahedral quadrangulation and its diagonal completion.

The robber lives on dodecahedron vertices. It waits until a cop becomes
adjacent, then walks r -> d' -> d to a dodecahedron neighbour d whose set
``N[d'] | N^2[d]`` held no cop at decision time.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from ..constructions import EmbeddedGraph, Tag
from ..game import ClaimViolation, Side
from ..graph import Graph, closed_ball

CLAIM = "two-cop escape"


class EscapeRobber:
    side = Side.ROBBER

    def __init__(self, q: EmbeddedGraph, play: Graph | None = None) -> None:
        """``q`` supplies the dodecahedron structure; ``play`` is the game graph (Q or Q')."""
        play = q.graph if play is None else play
        if play.n != q.graph.n:
            raise ValueError("game graph must share vertex ids with the quadrangulation")
        self._setup(play, q.vertices_tagged(Tag.D_VERTEX), q.subdivides)

    @classmethod
    def from_tags(cls, play: Graph, tags: Sequence[Tag]) -> "EscapeRobber":
        """Rebuild the structure from vertex tags alone: a midpoint's endpoints are its D/T neighbours."""
        ends = {Tag.D_VERTEX, Tag.T_APEX}
        subdivides = {}
        for v, t in enumerate(tags):
            if t is Tag.EDGE_MID:
                e = [w for w in play.adjacency[v] if tags[w] in ends]
                if len(e) != 2:
                    raise ValueError(f"midpoint {v} has {len(e)} construction neighbours")
                subdivides[v] = (e[0], e[1])
        self = cls.__new__(cls)
        self._setup(play, [v for v, t in enumerate(tags) if t is Tag.D_VERTEX], subdivides)
        return self

    def _setup(self, play: Graph, d_vertices: list[int], subdivides) -> None:
        self.play = play
        self.d_vertices = d_vertices
        dset = set(self.d_vertices)
        self.d_neighbors: dict[int, list[tuple[int, int]]] = {r: [] for r in self.d_vertices}
        for mid, (a, b) in subdivides.items():
            if a in dset and b in dset:
                self.d_neighbors[a].append((b, mid))
                self.d_neighbors[b].append((a, mid))
        for r, nbrs in self.d_neighbors.items():
            nbrs.sort()
            if len(nbrs) != 3:
                raise ValueError(f"dodecahedron vertex {r} has {len(nbrs)} subdivided D-edges")
        self._sets: dict[tuple[int, int], frozenset[int]] = {}
        self._target: int | None = None
        self.decisions = 0

    def escape_set(self, d: int, mid: int) -> frozenset[int]:
        key = (d, mid)
        if key not in self._sets:
            self._sets[key] = frozenset(closed_ball(self.play, mid, 1) | closed_ball(self.play, d, 2))
        return self._sets[key]

    def overlaps(self, r: int) -> list[tuple[int, int, frozenset[int]]]:
        """Pairs of D-neighbours of r whose escape sets share more than r."""
        out = []
        for (d1, m1), (d2, m2) in combinations(self.d_neighbors[r], 2):
            common = (self.escape_set(d1, m1) & self.escape_set(d2, m2)) - {r}
            if common:
                out.append((d1, d2, common))
        return out

    def place_cops(self, g: Graph) -> tuple[int, ...]:
        raise TypeError("robber policy cannot place cops")

    def place_robber(self, g: Graph, cops: tuple[int, ...]) -> int:
        self._target = None
        for r in self.d_vertices:
            if not closed_ball(self.play, r, 1) & set(cops):
                return r
        raise ClaimViolation(CLAIM, f"every dodecahedron vertex has a cop in its closed neighbourhood: {cops}")

    def move(self, g: Graph, history: Sequence) -> int:
        cops, robber = history[-1]
        if self._target is not None:
            target, self._target = self._target, None
            return target
        if robber not in self.d_neighbors:
            raise ClaimViolation(CLAIM, f"robber at {robber} is off the dodecahedron between moves")
        cop_set = set(cops)
        if not any(self.play.has_edge(robber, c) for c in cop_set):
            return robber
        self.decisions += 1
        for d, mid in self.d_neighbors[robber]:
            if not self.escape_set(d, mid) & cop_set:
                self._target = d
                return mid
        raise ClaimViolation(CLAIM, f"robber at {robber}, cops at {tuple(cops)}: all three escape sets hold a cop")


def robber_escape_policy(q: EmbeddedGraph, play: Graph | None = None) -> EscapeRobber:
    return EscapeRobber(q, play)
