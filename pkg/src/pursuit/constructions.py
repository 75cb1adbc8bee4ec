"""Graph constructions: the dodecahedron pipeline D -> T -> Q -> Q', kites,
uniform subdivisions and 1-planarization of drawings with crossings.

Embedded graphs carry their face cycles from stage to stage; nothing here
ever recomputes an embedding.
"""

from __future__ import annotations

import enum
import math
from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .graph import Graph, GraphError, canonical_edge

Edge = tuple[int, int]


class Tag(str, enum.Enum):
    D_VERTEX = "D_VERTEX"
    T_APEX = "T_APEX"
    EDGE_MID = "EDGE_MID"
    FACE_VERTEX = "FACE_VERTEX"


class ConstructionError(GraphError):
    pass


@dataclass(frozen=True)
class EmbeddedGraph:
    """A graph with its face cycles (directed, consistently oriented).

    ``subdivides`` maps each EDGE_MID vertex to the edge it subdivided, in the
    ids of the previous stage's graph lifted to this one (original vertices
    keep their ids across stages). ``outer_face`` is the index of a face that
    is not treated as interior; ``None`` means every face is interior (a
    spherical embedding).
    """

    graph: Graph
    faces: tuple[tuple[int, ...], ...]
    vertex_tags: tuple[Tag, ...]
    subdivides: Mapping[int, Edge] = field(default_factory=dict)
    outer_face: int | None = None

    def __post_init__(self) -> None:
        check_embedding(self)

    def vertices_tagged(self, tag: Tag) -> list[int]:
        return [v for v, t in enumerate(self.vertex_tags) if t is tag]

    def midpoint(self, a: int, b: int) -> int:
        """The EDGE_MID vertex subdividing ``ab``."""
        key = canonical_edge(a, b)
        for v, e in self.subdivides.items():
            if e == key:
                return v
        raise KeyError(f"no vertex subdivides {key}")

    def interior_faces(self) -> list[tuple[int, ...]]:
        return [f for i, f in enumerate(self.faces) if i != self.outer_face]


def face_edges(face: Sequence[int]) -> list[Edge]:
    return [(face[i], face[(i + 1) % len(face)]) for i in range(len(face))]


def check_embedding(e: EmbeddedGraph) -> None:
    g = e.graph
    if len(e.vertex_tags) != g.n:
        raise ConstructionError("every vertex needs a tag")
    directed = Counter(de for f in e.faces for de in face_edges(f))
    for (u, v), count in directed.items():
        if not g.has_edge(u, v):
            raise ConstructionError(f"face uses non-edge {u}-{v}")
        if count != 1:
            raise ConstructionError(f"directed edge {u}->{v} appears {count} times")
    for u, v in g.edges():
        if (u, v) not in directed or (v, u) not in directed:
            raise ConstructionError(f"edge {u}-{v} is not on exactly two face sides")
    if g.is_connected() and g.n - g.m + len(e.faces) != 2:
        raise ConstructionError(f"Euler relation fails: {g.n} - {g.m} + {len(e.faces)} != 2")


def orient_faces(faces: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Reverse faces as needed so each directed edge is used by exactly one face."""
    faces = [tuple(f) for f in faces]
    by_edge: dict[Edge, list[int]] = defaultdict(list)
    for i, f in enumerate(faces):
        for u, v in face_edges(f):
            by_edge[canonical_edge(u, v)].append(i)
    fixed = [False] * len(faces)
    for root in range(len(faces)):
        if fixed[root]:
            continue
        fixed[root] = True
        queue = deque([root])
        while queue:
            i = queue.popleft()
            own = set(face_edges(faces[i]))
            for u, v in own:
                for j in by_edge[canonical_edge(u, v)]:
                    if j == i or fixed[j]:
                        continue
                    if (u, v) in set(face_edges(faces[j])):
                        faces[j] = faces[j][::-1]
                    fixed[j] = True
                    queue.append(j)
    return faces


def embedded_from_faces(
    n: int,
    faces: Iterable[Sequence[int]],
    tags: Sequence[Tag] | None = None,
    outer_face: int | None = None,
    subdivides: Mapping[int, Edge] | None = None,
) -> EmbeddedGraph:
    faces = orient_faces(list(faces))
    edges = {canonical_edge(u, v) for f in faces for u, v in face_edges(f)}
    g = Graph.from_edges(n, edges)
    return EmbeddedGraph(
        graph=g,
        faces=tuple(faces),
        vertex_tags=tuple(tags) if tags is not None else (Tag.D_VERTEX,) * n,
        subdivides=dict(subdivides or {}),
        outer_face=outer_face,
    )


# -- polyhedra -----------------------------------------------------------------


def dodecahedron() -> EmbeddedGraph:
    """Skeleton of the dodecahedron: outer 5-ring 0-4, middle 10-ring 5-14, inner 5-ring 15-19."""
    outer = list(range(5))
    mid = [5 + j for j in range(10)]
    inner = [15 + i for i in range(5)]
    faces = [tuple(outer), tuple(inner)]
    for i in range(5):
        faces.append((outer[i], outer[(i + 1) % 5], mid[(2 * i + 2) % 10], mid[2 * i + 1], mid[2 * i]))
        faces.append(
            (
                mid[2 * i + 1],
                mid[(2 * i + 2) % 10],
                mid[(2 * i + 3) % 10],
                inner[(i + 1) % 5],
                inner[i],
            )
        )
    return embedded_from_faces(20, faces)


def prism(k: int) -> EmbeddedGraph:
    if k < 3:
        raise ConstructionError("prism needs k >= 3")
    top = list(range(k))
    bot = [k + i for i in range(k)]
    faces = [tuple(top), tuple(bot)]
    faces += [(top[i], top[(i + 1) % k], bot[(i + 1) % k], bot[i]) for i in range(k)]
    return embedded_from_faces(2 * k, faces)


def antiprism(k: int) -> EmbeddedGraph:
    if k < 3:
        raise ConstructionError("antiprism needs k >= 3")
    top = list(range(k))
    bot = [k + i for i in range(k)]
    faces = [tuple(top), tuple(bot)]
    for i in range(k):
        faces.append((top[i], top[(i + 1) % k], bot[i]))
        faces.append((bot[i], top[(i + 1) % k], bot[(i + 1) % k]))
    return embedded_from_faces(2 * k, faces)


def pyramid(k: int) -> EmbeddedGraph:
    """Wheel graph: a k-cycle plus a hub."""
    if k < 3:
        raise ConstructionError("pyramid needs k >= 3")
    hub = k
    faces = [tuple(range(k))] + [(i, (i + 1) % k, hub) for i in range(k)]
    return embedded_from_faces(k + 1, faces)


def icosahedron() -> EmbeddedGraph:
    # top 0, upper ring 1-5, lower ring 6-10, bottom 11
    faces = []
    for i in range(5):
        u, u2 = 1 + i, 1 + (i + 1) % 5
        l, l2 = 6 + i, 6 + (i + 1) % 5
        faces += [(0, u, u2), (u, l, u2), (u2, l, l2), (11, l2, l)]
    return embedded_from_faces(12, faces)


def cycle_embedding(n: int) -> EmbeddedGraph:
    """A plane cycle: one interior face and the outer face."""
    inner = tuple(range(n))
    return embedded_from_faces(n, [inner, inner[::-1]], outer_face=1)


# -- the D -> T -> Q pipeline ---------------------------------------------------


def triangulate_pentagons(d: EmbeddedGraph) -> EmbeddedGraph:
    """Put one apex in every pentagonal face and join it to the five corners."""
    n = d.graph.n
    faces = []
    tags = list(d.vertex_tags)
    for i, face in enumerate(d.faces):
        if len(face) != 5 and i != d.outer_face:
            raise ConstructionError(f"face {face} is not a pentagon")
        apex = n + i
        tags.append(Tag.T_APEX)
        faces += [(u, v, apex) for u, v in face_edges(face)]
    return embedded_from_faces(n + len(d.faces), faces, tags)


def quadrangulate(t: EmbeddedGraph) -> EmbeddedGraph:
    """Subdivide every edge once and join a new hub in each triangle to its three midpoints."""
    if any(len(f) != 3 for f in t.faces):
        raise ConstructionError("quadrangulate expects a triangulation")
    n = t.graph.n
    tags = list(t.vertex_tags)
    mid: dict[Edge, int] = {}
    subdivides: dict[int, Edge] = {}
    for e in t.graph.edges():
        mid[e] = n + len(mid)
        subdivides[mid[e]] = e
        tags.append(Tag.EDGE_MID)
    faces = []
    for face in t.faces:
        hub = len(tags)
        tags.append(Tag.FACE_VERTEX)
        a, b, c = face
        mab, mbc, mca = (mid[canonical_edge(x, y)] for x, y in ((a, b), (b, c), (c, a)))
        faces += [(a, mab, hub, mca), (b, mbc, hub, mab), (c, mca, hub, mbc)]
    q = embedded_from_faces(len(tags), faces, tags, subdivides=subdivides)
    if not q.graph.is_bipartite():
        raise ConstructionError("quadrangulation is not bipartite")
    return q


def radial_graph(p: EmbeddedGraph) -> EmbeddedGraph:
    """Vertex-face incidence quadrangulation of a plane graph (one quad per edge)."""
    n = p.graph.n
    side: dict[tuple[int, int], int] = {}
    for i, face in enumerate(p.faces):
        for u, v in face_edges(face):
            side[(u, v)] = n + i
    faces = [(u, side[(u, v)], v, side[(v, u)]) for u, v in p.graph.edges()]
    tags = [Tag.D_VERTEX] * n + [Tag.FACE_VERTEX] * len(p.faces)
    return embedded_from_faces(n + len(p.faces), faces, tags)


# -- kites --------------------------------------------------------------------


@dataclass(frozen=True)
class KiteMap:
    """Crossing edge pairs of a 1-planar drawing and their enclosing quadrangles.

    ``kite[pair]`` for the crossing pair {ab, cd} is the quadrangle (a, c, b, d).
    """

    crossings: frozenset[frozenset[Edge]]
    kite: Mapping[frozenset[Edge], tuple[int, int, int, int]]
    _partner: dict[Edge, Edge] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        partner: dict[Edge, Edge] = {}
        for pair in self.crossings:
            e, f = tuple(pair)
            for x, y in ((e, f), (f, e)):
                if x in partner:
                    raise ConstructionError(f"edge {x} crossed more than once")
                partner[x] = y
        object.__setattr__(self, "_partner", partner)

    @classmethod
    def empty(cls) -> "KiteMap":
        return cls(frozenset(), {})

    def partner(self, u: int, v: int) -> Edge | None:
        return self._partner.get(canonical_edge(u, v))

    def crossed_edges(self) -> set[Edge]:
        return set(self._partner)

    def edges_crossing(self, edges: Iterable[Edge]) -> set[Edge]:
        out = set()
        for u, v in edges:
            p = self.partner(u, v)
            if p is not None:
                out.add(p)
        return out

    def validate(self, g: Graph) -> None:
        for pair in self.crossings:
            a, c, b, d = self.kite[pair]
            if {canonical_edge(a, b), canonical_edge(c, d)} != set(pair):
                raise ConstructionError(f"kite {self.kite[pair]} does not match pair {set(pair)}")
            for x, y in ((a, c), (c, b), (b, d), (d, a)):
                if not g.has_edge(x, y):
                    raise ConstructionError(f"kite side {x}-{y} missing")
                if self.partner(x, y) is not None:
                    raise ConstructionError(f"kite side {x}-{y} is crossed")
            for x, y in pair:
                if not g.has_edge(x, y):
                    raise ConstructionError(f"crossing edge {x}-{y} missing")


def add_kite_diagonals(q: EmbeddedGraph) -> tuple[Graph, KiteMap]:
    """Insert both crossing diagonals in every interior quadrangle."""
    edges = set(q.graph.edges())
    crossings = set()
    kite = {}
    for face in q.interior_faces():
        if len(face) != 4:
            raise ConstructionError(f"face {face} is not a quadrangle")
        p0, p1, p2, p3 = face
        e, f = canonical_edge(p0, p2), canonical_edge(p1, p3)
        for diag in (e, f):
            if diag in edges:
                raise ConstructionError(f"diagonal {diag} duplicates an existing edge")
            edges.add(diag)
        pair = frozenset((e, f))
        crossings.add(pair)
        kite[pair] = (p0, p1, p2, p3)
    g = Graph.from_edges(q.graph.n, edges)
    km = KiteMap(frozenset(crossings), kite)
    km.validate(g)
    return g, km


def kite_instances() -> list[tuple[str, Graph, KiteMap]]:
    """Small optimal 1-planar graphs: diagonals added to radial graphs of polyhedra."""
    sources: list[tuple[str, EmbeddedGraph]] = [("cube-from-tetrahedron", radial_graph(pyramid(3)))]
    sources += [(f"radial-pyramid-{k}", radial_graph(pyramid(k))) for k in range(4, 10)]
    sources += [(f"radial-prism-{k}", radial_graph(prism(k))) for k in range(3, 9)]
    sources += [(f"radial-antiprism-{k}", radial_graph(antiprism(k))) for k in range(3, 8)]
    sources += [
        ("radial-icosahedron", radial_graph(icosahedron())),
        ("radial-dodecahedron", radial_graph(dodecahedron())),
    ]
    out = []
    for name, q in sources:
        g, km = add_kite_diagonals(q)
        out.append((name, g, km))
    return out


# -- subdivision and 1-planarization -------------------------------------------


def subdivide_uniform(g: Graph, s: int) -> Graph:
    """Replace every edge by a path with ``s`` internal vertices.

    Internal vertices of the e-th canonical edge (u, v) are numbered
    ``n + e*s .. n + e*s + s - 1`` running from u toward v.
    """
    if s < 0:
        raise ConstructionError("subdivision count must be non-negative")
    if s == 0:
        return g
    n = g.n
    edges = []
    for e, (u, v) in enumerate(g.edges()):
        chain = [u, *range(n + e * s, n + e * s + s), v]
        edges += list(zip(chain, chain[1:]))
    return Graph.from_edges(n + s * g.m, edges)


@dataclass(frozen=True)
class CrossingDrawing:
    """A drawing given by the sequence of crossing edges along every edge.

    ``crossings[e]`` lists the edges crossing ``e`` in order from ``e``'s lower
    endpoint to its higher one.
    """

    graph: Graph
    crossings: Mapping[Edge, tuple[Edge, ...]]

    @property
    def k(self) -> int:
        return max((len(c) for c in self.crossings.values()), default=0)

    def validate(self) -> None:
        edges = set(self.graph.edges())
        counts: Counter[tuple[Edge, Edge]] = Counter()
        for e, seq in self.crossings.items():
            if e not in edges:
                raise ConstructionError(f"crossing list for non-edge {e}")
            for f in seq:
                if f not in edges:
                    raise ConstructionError(f"{e} crosses non-edge {f}")
                if f == e or set(e) & set(f):
                    raise ConstructionError(f"{e} crosses itself or an adjacent edge {f}")
                counts[(e, f)] += 1
        for (e, f), c in counts.items():
            if counts[(f, e)] != c:
                raise ConstructionError(f"crossing {e} x {f} is not recorded symmetrically")


def _segment_parameter(p, q, r, s) -> tuple[float, float] | None:
    px, py = p
    dx, dy = q[0] - px, q[1] - py
    ex, ey = s[0] - r[0], s[1] - r[1]
    den = dx * ey - dy * ex
    if abs(den) < 1e-12:
        return None
    t = ((r[0] - px) * ey - (r[1] - py) * ex) / den
    u = ((r[0] - px) * dy - (r[1] - py) * dx) / den
    eps = 1e-9
    if eps < t < 1 - eps and eps < u < 1 - eps:
        return t, u
    return None


def drawing_from_coordinates(g: Graph, coords: Sequence[tuple[float, float]]) -> CrossingDrawing:
    """Straight-line drawing: crossings ordered along each edge from its lower endpoint."""
    edges = g.edges()
    hits: dict[Edge, list[tuple[float, Edge]]] = {e: [] for e in edges}
    for i, e in enumerate(edges):
        for f in edges[i + 1 :]:
            if set(e) & set(f):
                continue
            par = _segment_parameter(coords[e[0]], coords[e[1]], coords[f[0]], coords[f[1]])
            if par is not None:
                hits[e].append((par[0], f))
                hits[f].append((par[1], e))
    return CrossingDrawing(g, {e: tuple(f for _, f in sorted(h)) for e, h in hits.items()})


def petersen_two_planar_drawing() -> CrossingDrawing:
    """Pentagon outside, pentagram inside: each pentagram edge crosses two others."""
    from .graph import petersen_graph

    coords = []
    for radius in (2.0, 1.0):
        for i in range(5):
            a = math.pi / 2 + 2 * math.pi * i / 5
            coords.append((radius * math.cos(a), radius * math.sin(a)))
    return drawing_from_coordinates(petersen_graph(), coords)


def subdivisions_for(k: int) -> int:
    """Internal vertices per edge so every edge becomes an odd path carrying <= 1 crossing per piece."""
    return k - 1 if k % 2 == 1 else k


@dataclass(frozen=True)
class OnePlanarCertificate:
    """Crossings of the subdivided graph, keyed by sub-edge."""

    subdivisions: int
    crossing_pairs: tuple[tuple[Edge, Edge], ...]
    per_edge: Mapping[Edge, int]

    @property
    def max_crossings(self) -> int:
        return max(self.per_edge.values(), default=0)


def one_planarize(d: CrossingDrawing) -> tuple[Graph, OnePlanarCertificate]:
    """Subdivide a k-planar drawing uniformly and place each crossing on its own sub-edge."""
    d.validate()
    g = d.graph
    s = subdivisions_for(d.k)
    out = subdivide_uniform(g, s)
    n = g.n
    edge_id = {e: i for i, e in enumerate(g.edges())}

    def piece(e: Edge, j: int) -> Edge:
        u, v = e
        chain = [u, *range(n + edge_id[e] * s, n + edge_id[e] * s + s), v]
        return canonical_edge(chain[j], chain[j + 1])

    position: dict[tuple[Edge, Edge], list[int]] = defaultdict(list)
    for e, seq in d.crossings.items():
        if len(seq) > s + 1:
            raise ConstructionError(f"edge {e} has {len(seq)} crossings but only {s + 1} pieces")
        for j, f in enumerate(seq):
            position[(e, f)].append(j)
    pairs = []
    per_edge: Counter[Edge] = Counter({e: 0 for e in out.edges()})
    for (e, f), js in sorted(position.items()):
        if e > f:
            continue
        ks = position[(f, e)]
        if len(ks) != len(js):
            raise ConstructionError(f"inconsistent crossings between {e} and {f}")
        for j, k in zip(js, ks):
            a, b = piece(e, j), piece(f, k)
            pairs.append((a, b))
            per_edge[a] += 1
            per_edge[b] += 1
    cert = OnePlanarCertificate(s, tuple(pairs), dict(per_edge))
    if cert.max_crossings > 1:
        raise ConstructionError("assignment left a sub-edge with two crossings")
    return out, cert
