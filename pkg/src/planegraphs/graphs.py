"""Graphs, plane embeddings of graphs, and the embedding file format.

An embedding maps vertices to distinct plane points and edges to distinct
plane lines, each edge's line passing through both endpoint images.  Since
two points span one line, the edge map is determined by the vertex map;
stored edge images are an audit trail the verifier recomputes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .plane import CoordPlane, GenericPlane, incident, is_affine, line_through


class ImpossibleDegree(ValueError):
    """A vertex needs more lines through its image than the plane has."""


@dataclass(frozen=True)
class Graph:
    kind: str
    n_vertices: int
    edges: tuple  # sorted (u, v) pairs, u < v
    param: Optional[int] = None

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    @property
    def max_degree(self) -> int:
        deg = [0] * self.n_vertices
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return max(deg, default=0)

    def neighbors(self, v: int) -> tuple:
        return tuple(u + w - v for u, w in self.edges if v in (u, w))

    def json_dict(self) -> dict:
        if self.kind == "CYCLE":
            return {"kind": "CYCLE", "k": self.param}
        if self.kind in ("WHEEL", "GEAR"):
            return {"kind": self.kind, "n": self.param}
        return {
            "kind": "EDGE_LIST",
            "vertices": self.n_vertices,
            "edges": [list(e) for e in self.edges],
        }


def _norm_edges(edges) -> tuple:
    out = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop edge at {u}")
        out.add((u, v) if u < v else (v, u))
    return tuple(sorted(out))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph("CYCLE", k, _norm_edges((i, (i + 1) % k) for i in range(k)), param=k)


def wheel_graph(n: int) -> Graph:
    # center 0, rim 1..n
    if n < 3:
        raise ValueError("wheel needs rim length at least 3")
    edges = [(i, i % n + 1) for i in range(1, n + 1)]
    edges += [(0, i) for i in range(1, n + 1)]
    return Graph("WHEEL", n + 1, _norm_edges(edges), param=n)


def gear_graph(n: int) -> Graph:
    # center 0, rim 1..2n; odd rim ids carry the spokes, so vertex 1 has degree 3
    if n < 3:
        raise ValueError("gear needs at least 3 spokes")
    rim = [(i, i % (2 * n) + 1) for i in range(1, 2 * n + 1)]
    spokes = [(0, i) for i in range(1, 2 * n + 1, 2)]
    return Graph("GEAR", 2 * n + 1, _norm_edges(rim + spokes), param=n)


def edge_list_graph(edges, n_vertices: Optional[int] = None) -> Graph:
    e = _norm_edges(edges)
    top = max((v for pair in e for v in pair), default=-1) + 1
    n = top if n_vertices is None else n_vertices
    if n < top:
        raise ValueError("edge references vertex beyond n_vertices")
    return Graph("EDGE_LIST", n, e)


def graph_from_json(doc: dict) -> Graph:
    kind = doc.get("kind")
    if kind == "CYCLE":
        return cycle_graph(doc["k"])
    if kind == "WHEEL":
        return wheel_graph(doc["n"])
    if kind == "GEAR":
        return gear_graph(doc["n"])
    if kind == "EDGE_LIST":
        return edge_list_graph([tuple(e) for e in doc["edges"]], doc.get("vertices"))
    raise ValueError(f"unknown graph kind {kind!r}")


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Embedding:
    model: str  # PG | AG | CYCLIC | GENERIC
    q: int
    graph: Graph
    vertex_images: tuple  # indexed by vertex id; triples or int ids
    edge_images: tuple  # aligned with graph.edges

    def image_of(self, v: int):
        return self.vertex_images[v]

    def line_of(self, u: int, v: int):
        e = (u, v) if u < v else (v, u)
        return self.edge_images[self.graph.edges.index(e)]


@dataclass
class VerifyReport:
    vertices_injective: bool
    edges_well_defined: bool
    edges_injective: bool
    degree_bound_ok: bool
    violations: list

    @property
    def ok(self) -> bool:
        return (
            self.vertices_injective
            and self.edges_well_defined
            and self.edges_injective
            and self.degree_bound_ok
            and not self.violations
        )


def verify_embedding(graph: Graph, emb: Embedding, plane) -> VerifyReport:
    """Check an embedding against the plane it claims to live in.

    Structural mismatches (wrong plane, image outside the plane) raise;
    mathematical failures are collected into the report.
    """
    if emb.graph.edges != graph.edges or emb.graph.n_vertices != graph.n_vertices:
        raise ValueError("embedding was built for a different graph")
    if len(emb.vertex_images) != graph.n_vertices:
        raise ValueError("one image per vertex required")

    violations = []
    if isinstance(plane, CoordPlane):
        if emb.model != plane.model or emb.q != plane.q:
            raise ValueError(f"embedding targets {emb.model}(2,{emb.q}), got {plane}")
        recomputed = _verify_coord(graph, emb, plane, violations)
    elif isinstance(plane, GenericPlane):
        if emb.model not in ("CYCLIC", "GENERIC") or emb.q != plane.q:
            raise ValueError(f"embedding targets {emb.model}(2,{emb.q}), not this plane")
        recomputed = _verify_generic(graph, emb, plane, violations)
    else:
        raise TypeError(f"not a plane: {plane!r}")

    vertices_injective = len(set(emb.vertex_images)) == graph.n_vertices
    if not vertices_injective:
        violations.append("vertex images collide")
    edges_well_defined = all(l is not None for l in recomputed)
    defined = [l for l in recomputed if l is not None]
    edges_injective = len(set(defined)) == len(defined)
    if not edges_injective:
        violations.append("edge lines collide")
    bound = plane.q + 1 if isinstance(plane, CoordPlane) else plane.max_pencil
    degree_bound_ok = graph.max_degree <= bound
    if not degree_bound_ok:
        violations.append(f"max degree {graph.max_degree} exceeds pencil size {bound}")
    return VerifyReport(
        vertices_injective, edges_well_defined, edges_injective, degree_bound_ok, violations
    )


def _verify_coord(graph, emb, plane, violations) -> list:
    sp = plane.spec
    for v, P in enumerate(emb.vertex_images):
        P = tuple(P)
        if not plane.contains(P):
            raise ValueError(f"vertex {v} image {P} is not a point of {plane}")
    recomputed = []
    for (u, v), stored in zip(graph.edges, emb.edge_images):
        P, Q = tuple(emb.vertex_images[u]), tuple(emb.vertex_images[v])
        if P == Q:
            recomputed.append(None)
            violations.append(f"edge {(u, v)} endpoints map to one point")
            continue
        l = line_through(sp, P, Q)
        recomputed.append(l)
        if tuple(stored) != l:
            violations.append(f"edge {(u, v)} stores line {tuple(stored)}, spans {l}")
        if plane.model == "AG" and not is_affine(P):
            violations.append(f"vertex {u} image {P} is infinite")
    return recomputed


def _verify_generic(graph, emb, plane, violations) -> list:
    for v, p in enumerate(emb.vertex_images):
        if not isinstance(p, int) or not 0 <= p < plane.n_points:
            raise ValueError(f"vertex {v} image {p!r} is not a point id")
    recomputed = []
    for (u, v), stored in zip(graph.edges, emb.edge_images):
        a, b = emb.vertex_images[u], emb.vertex_images[v]
        if a == b:
            recomputed.append(None)
            violations.append(f"edge {(u, v)} endpoints map to one point")
            continue
        li = plane.line_between(a, b)
        if li is None:
            recomputed.append(None)
            violations.append(f"edge {(u, v)}: no line joins points {a},{b}")
            continue
        recomputed.append(li)
        if stored != li:
            violations.append(f"edge {(u, v)} stores line {stored}, joins on {li}")
    return recomputed


# ---------------------------------------------------------------------------
# embedding files


def embedding_to_json(emb: Embedding) -> str:
    doc = {
        "plane": {"model": emb.model, "q": emb.q},
        "graph": emb.graph.json_dict(),
        "vertices": [[v, _img_json(img)] for v, img in enumerate(emb.vertex_images)],
        "edges": [
            [list(e), _img_json(img)] for e, img in zip(emb.graph.edges, emb.edge_images)
        ],
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def _img_json(img):
    return list(img) if isinstance(img, tuple) else img


def _img_load(raw):
    return tuple(raw) if isinstance(raw, list) else raw


def write_embedding(emb: Embedding, path) -> None:
    with open(path, "w") as fh:
        fh.write(embedding_to_json(emb))


def read_embedding(path) -> Embedding:
    with open(path) as fh:
        doc = json.load(fh)
    plane = doc.get("plane", {})
    model, q = plane.get("model"), plane.get("q")
    if model not in ("PG", "AG", "CYCLIC", "GENERIC"):
        raise ValueError(f"unknown plane model {model!r}")
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"bad plane order {q!r}")
    graph = graph_from_json(doc["graph"])
    vimg: dict = {}
    for item in doc["vertices"]:
        v, raw = item
        if v in vimg:
            raise ValueError(f"vertex {v} listed twice")
        vimg[v] = _img_load(raw)
    if sorted(vimg) != list(range(graph.n_vertices)):
        raise ValueError("vertex list must cover 0..n-1 exactly once")
    eimg = {}
    for item in doc["edges"]:
        (u, v), raw = item
        e = (u, v) if u < v else (v, u)
        if e not in graph.edges:
            raise ValueError(f"edge {e} is not in the graph")
        if e in eimg:
            raise ValueError(f"edge {e} listed twice")
        eimg[e] = _img_load(raw)
    if set(eimg) != set(graph.edges):
        raise ValueError("edge list must cover every graph edge")
    return Embedding(
        model=model,
        q=q,
        graph=graph,
        vertex_images=tuple(vimg[v] for v in range(graph.n_vertices)),
        edge_images=tuple(eimg[e] for e in graph.edges),
    )


def make_embedding(model: str, q: int, graph: Graph, vertex_images, plane=None) -> Embedding:
    """Build an embedding from vertex images, deriving edge lines.

    For PG/AG the lines are computed from coordinates; for generic models a
    plane must be supplied to resolve line ids.
    """
    vertex_images = tuple(
        tuple(i) if isinstance(i, (list, tuple)) else i for i in vertex_images
    )
    edge_images = []
    if model in ("PG", "AG"):
        if plane is None or not isinstance(plane, CoordPlane):
            raise ValueError("coordinate embedding needs its CoordPlane")
        for u, v in graph.edges:
            edge_images.append(line_through(plane.spec, vertex_images[u], vertex_images[v]))
    else:
        if plane is None or not isinstance(plane, GenericPlane):
            raise ValueError("generic embedding needs its GenericPlane")
        for u, v in graph.edges:
            li = plane.line_between(vertex_images[u], vertex_images[v])
            if li is None:
                raise ValueError(f"no line joins images of edge {(u, v)}")
            edge_images.append(li)
    return Embedding(model, q, graph, vertex_images, tuple(edge_images))
