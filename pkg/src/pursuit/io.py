"""GraphDocument JSON, DOT export and the glue between documents and library types.

A document is ``{"n", "edges", ["faces"], ["tags"], ["crossings"], ["outer"]}``
serialised with sorted keys and no optional key set to null, so
``dumps(loads(text)) == text`` for any canonical text.

A crossing record is ``[[a, b], [c, d]]``. When the crossing order along
edges matters (drawings with more than one crossing per edge) the record
carries a third element ``[i, j]``: the crossing is the ``i``-th along
``ab`` and the ``j``-th along ``cd``, counted from the lower endpoint.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Mapping, Sequence

from .constructions import CrossingDrawing, EmbeddedGraph, KiteMap, OnePlanarCertificate, Tag
from .graph import Graph, GraphError, canonical_edge
from .outer import OuterDrawing

Edge = tuple[int, int]
Crossing = tuple[Edge, Edge, tuple[int, int] | None]

_TAG_COLORS = {
    Tag.D_VERTEX.value: "red",
    Tag.T_APEX.value: "orange",
    Tag.EDGE_MID.value: "lightblue",
    Tag.FACE_VERTEX.value: "gray",
}


class DocumentError(GraphError):
    pass


@dataclass(frozen=True)
class GraphDocument:
    n: int
    edges: tuple[Edge, ...]
    faces: tuple[tuple[int, ...], ...] | None = None
    tags: Mapping[int, str] | None = None
    crossings: tuple[Crossing, ...] | None = None
    outer: bool = False

    def __post_init__(self) -> None:
        edges = tuple(sorted({canonical_edge(int(u), int(v)) for u, v in self.edges}))
        if len(edges) != len(self.edges):
            raise DocumentError("duplicate edges")
        for u, v in edges:
            if u == v or not 0 <= u < v < self.n:
                raise DocumentError(f"bad edge {u}-{v} for n={self.n}")
        object.__setattr__(self, "edges", edges)
        have = set(edges)
        if self.crossings is not None:
            recs = []
            for rec in self.crossings:
                e, f = canonical_edge(*rec[0]), canonical_edge(*rec[1])
                if e not in have or f not in have:
                    raise DocumentError(f"crossing {e} x {f} uses a missing edge")
                order = None if rec[2] is None else (int(rec[2][0]), int(rec[2][1]))
                if f < e:
                    e, f = f, e
                    order = None if order is None else (order[1], order[0])
                recs.append((e, f, order))
            object.__setattr__(self, "crossings", tuple(sorted(recs, key=_crossing_key)))
        if self.tags is not None:
            tags = {int(v): str(t) for v, t in self.tags.items()}
            if any(not 0 <= v < self.n for v in tags):
                raise DocumentError("tag on a missing vertex")
            object.__setattr__(self, "tags", tags)
        if self.faces is not None:
            object.__setattr__(self, "faces", tuple(tuple(int(v) for v in f) for f in self.faces))

    # -- JSON -------------------------------------------------------------

    def to_obj(self) -> dict[str, Any]:
        obj: dict[str, Any] = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if self.faces is not None:
            obj["faces"] = [list(f) for f in self.faces]
        if self.tags is not None:
            obj["tags"] = {str(v): t for v, t in sorted(self.tags.items())}
        if self.crossings is not None:
            obj["crossings"] = [
                [list(e), list(f)] if o is None else [list(e), list(f), list(o)] for e, f, o in self.crossings
            ]
        if self.outer:
            obj["outer"] = True
        return obj

    def dumps(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, separators=(",", ":")) + "\n"

    @classmethod
    def from_obj(cls, obj: Mapping[str, Any]) -> "GraphDocument":
        try:
            n = int(obj["n"])
            edges = tuple((int(u), int(v)) for u, v in obj["edges"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DocumentError(f"not a graph document: {exc}") from exc
        crossings = None
        if obj.get("crossings") is not None:
            crossings = tuple(
                (tuple(r[0]), tuple(r[1]), tuple(r[2]) if len(r) > 2 else None) for r in obj["crossings"]
            )
        return cls(n, edges, obj.get("faces"), obj.get("tags"), crossings, bool(obj.get("outer", False)))

    @classmethod
    def loads(cls, text: str) -> "GraphDocument":
        try:
            return cls.from_obj(json.loads(text))
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from exc

    # -- conversions ------------------------------------------------------

    @property
    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)

    def kites(self) -> KiteMap:
        """KiteMap for a 1-planar document; each kite quadrangle is read off the graph."""
        if not self.crossings:
            return KiteMap.empty()
        g = self.graph
        pairs, kite = set(), {}
        for e, f, _ in self.crossings:
            (a, b), (c, d) = e, f
            quad = None
            for q in ((a, c, b, d), (a, d, b, c)):
                if all(g.has_edge(q[i], q[(i + 1) % 4]) for i in range(4)):
                    quad = q
                    break
            if quad is None:
                raise DocumentError(f"crossing {e} x {f} has no enclosing kite")
            pair = frozenset((e, f))
            pairs.add(pair)
            kite[pair] = quad
        return KiteMap(frozenset(pairs), kite)

    def crossing_drawing(self) -> CrossingDrawing:
        """Ordered crossings; records without an order fall back to record order along each edge."""
        seen: dict[Edge, list[tuple[int, Edge]]] = {e: [] for e in self.edges}
        for i, (e, f, o) in enumerate(self.crossings or ()):
            oe, of = (i, i) if o is None else o
            seen[e].append((oe, f))
            seen[f].append((of, e))
        return CrossingDrawing(self.graph, {e: tuple(x for _, x in sorted(v)) for e, v in seen.items()})

    def outer_drawing(self, k: int = 1) -> OuterDrawing:
        return OuterDrawing(self.graph, k)

    def tag_list(self) -> list[Tag] | None:
        if self.tags is None:
            return None
        return [Tag(self.tags[v]) if v in self.tags else None for v in range(self.n)]


def _crossing_key(rec: Crossing):
    e, f, o = rec
    return (e, f, o or (-1, -1))


def document_from(obj, kites: KiteMap | None = None, tags: Sequence[Tag] | None = None) -> GraphDocument:
    """GraphDocument for a Graph, EmbeddedGraph, OuterDrawing or CrossingDrawing."""
    if isinstance(obj, EmbeddedGraph):
        return GraphDocument(
            obj.graph.n,
            tuple(obj.graph.edges()),
            faces=obj.faces,
            tags={v: t.value for v, t in enumerate(obj.vertex_tags)},
        )
    if isinstance(obj, OuterDrawing):
        return GraphDocument(obj.graph.n, tuple(obj.graph.edges()), outer=True)
    if isinstance(obj, CrossingDrawing):
        recs = []
        for e, seq in obj.crossings.items():
            for i, f in enumerate(seq):
                if e < f:
                    recs.append((e, f, (i, obj.crossings[f].index(e))))
        return GraphDocument(obj.graph.n, tuple(obj.graph.edges()), crossings=tuple(recs))
    if isinstance(obj, Graph):
        crossings = None
        if kites is not None and kites.crossings:
            crossings = tuple((*sorted(pair), None) for pair in kites.crossings)
        tag_map = None if tags is None else {v: Tag(t).value for v, t in enumerate(tags) if t is not None}
        return GraphDocument(obj.n, tuple(obj.edges()), tags=tag_map, crossings=crossings)
    raise TypeError(f"cannot make a document from {type(obj).__name__}")


def certificate_document(g: Graph, cert: OnePlanarCertificate) -> GraphDocument:
    return GraphDocument(g.n, tuple(g.edges()), crossings=tuple((e, f, None) for e, f in cert.crossing_pairs))


def to_dot(doc: GraphDocument, name: str = "G") -> str:
    """Stable DOT text: nodes colored by tag, crossing edges dashed."""
    crossed = set()
    for e, f, _ in doc.crossings or ():
        crossed.update((e, f))
    lines = [f"graph {name} {{"]
    for v in range(doc.n):
        tag = (doc.tags or {}).get(v)
        if tag is None:
            lines.append(f"  {v};")
        else:
            color = _TAG_COLORS.get(tag, "black")
            lines.append(f'  {v} [label="{v}", tag="{tag}", style=filled, fillcolor={color}];')
    for u, v in doc.edges:
        style = " [style=dashed]" if (u, v) in crossed else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
