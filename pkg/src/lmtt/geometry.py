"""Embedded planar graphs: data model, validation, extremal vertices,
closest-point projection, and edge subdivision.

A graph lives in the plane with straight-line edges. Vertices are stored as
an (n, 2) coordinate array, edges as unordered index pairs. All operations
are pure; graphs are treated as immutable after construction.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

# Snap tolerance for reusing an existing vertex instead of creating a
# near-duplicate one (absolute, in input coordinate units).
EPS = 1e-9

# Tolerance used for exact-coincidence checks (duplicate vertices, ties).
TIE_EPS = 1e-12


class GraphValidationError(ValueError):
    """Base class for embedded-graph validation failures."""


class Disconnected(GraphValidationError):
    pass


class DuplicateVertex(GraphValidationError):
    pass


class BadEdgeIndex(GraphValidationError):
    pass


class EdgesCross(GraphValidationError):
    pass


@dataclass(frozen=True)
class GraphLocation:
    """A point on a graph: either a vertex, or an interior point of an edge.

    Exactly one form is populated. Parameters t in {0, 1} are canonicalized
    to the vertex form at construction time by the factory methods.
    """

    vertex: int | None = None
    edge: int | None = None
    t: float | None = None

    @staticmethod
    def at_vertex(v: int) -> "GraphLocation":
        return GraphLocation(vertex=int(v))

    @staticmethod
    def on_edge(edge: int, t: float, graph: "EmbeddedGraph") -> "GraphLocation":
        """Build an edge location, canonicalizing endpoints to vertex form."""
        if t <= 0.0:
            return GraphLocation(vertex=int(graph.edges[edge, 0]))
        if t >= 1.0:
            return GraphLocation(vertex=int(graph.edges[edge, 1]))
        return GraphLocation(edge=int(edge), t=float(t))

    @property
    def is_vertex(self) -> bool:
        return self.vertex is not None

    def point(self, graph: "EmbeddedGraph") -> np.ndarray:
        if self.is_vertex:
            return graph.vertices[self.vertex]
        u, w = graph.edges[self.edge]
        return (1.0 - self.t) * graph.vertices[u] + self.t * graph.vertices[w]


class EmbeddedGraph:
    """A straight-line embedded graph: vertex coordinates + edge index pairs."""

    def __init__(self, vertices, edges):
        self.vertices = np.asarray(vertices, dtype=float).reshape(-1, 2)
        self.edges = np.asarray(edges, dtype=int).reshape(-1, 2)
        self.vertices.setflags(write=False)
        self.edges.setflags(write=False)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for u, w in self.edges:
            adj[u].append(int(w))
            adj[w].append(int(u))
        return adj

    def to_dict(self) -> dict:
        return {
            "vertices": [[float(x), float(y)] for x, y in self.vertices],
            "edges": [[int(u), int(w)] for u, w in self.edges],
        }

    @staticmethod
    def from_dict(data: dict) -> "EmbeddedGraph":
        return EmbeddedGraph(data["vertices"], data["edges"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __repr__(self) -> str:
        return f"EmbeddedGraph({self.n_vertices} vertices, {self.n_edges} edges)"


def validate(graph: EmbeddedGraph, check_crossings: bool = False) -> None:
    """Check graph invariants, raising a GraphValidationError subclass on failure.

    Enforced always: finite coordinates, at least one edge, edge indices in
    range, no self-loops, no duplicate edges, no coincident vertices, and
    connectivity. With ``check_crossings``, additionally reports any pair of
    edges whose open segments intersect.
    """
    V, E = graph.vertices, graph.edges
    n = len(V)
    if not np.all(np.isfinite(V)):
        raise GraphValidationError("vertex coordinates must be finite")
    if len(E) == 0:
        raise GraphValidationError("graph must have at least one edge")
    if n < 2:
        raise GraphValidationError("graph must have at least two vertices")
    if len(E) and (E.min() < 0 or E.max() >= n):
        raise BadEdgeIndex(f"edge index out of range [0, {n})")
    if np.any(E[:, 0] == E[:, 1]):
        raise BadEdgeIndex("self-loop edge")
    keys = {(min(u, w), max(u, w)) for u, w in E}
    if len(keys) != len(E):
        raise BadEdgeIndex("duplicate edge")

    # Coincident vertices break closest-point canonicalization downstream.
    order = np.lexsort((V[:, 1], V[:, 0]))
    S = V[order]
    close = np.all(np.abs(np.diff(S, axis=0)) <= TIE_EPS, axis=1)
    if np.any(close):
        i = int(np.argmax(close))
        raise DuplicateVertex(
            f"vertices {order[i]} and {order[i + 1]} share coordinates"
        )

    # Connectivity via union-find.
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, w in E:
        ru, rw = find(int(u)), find(int(w))
        if ru != rw:
            parent[ru] = rw
    roots = {find(i) for i in range(n)}
    if len(roots) != 1:
        raise Disconnected(f"graph has {len(roots)} connected components")

    if check_crossings:
        for i in range(len(E)):
            for j in range(i + 1, len(E)):
                if _open_segments_intersect(V, E[i], E[j]):
                    raise EdgesCross(f"edges {i} and {j} cross")


def _open_segments_intersect(V, e1, e2) -> bool:
    """True if the open segments of two edges intersect (shared endpoints allowed)."""
    a, b = V[e1[0]], V[e1[1]]
    c, d = V[e2[0]], V[e2[1]]
    if len({int(e1[0]), int(e1[1]), int(e2[0]), int(e2[1])}) < 4:
        # Shared endpoint: only a collinear overlap of positive length counts.
        return _collinear_overlap(a, b, c, d)

    def cross(o, p, q):
        return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])

    d1 = cross(c, d, a)
    d2 = cross(c, d, b)
    d3 = cross(a, b, c)
    d4 = cross(a, b, d)
    if ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)) and d1 * d2 != 0 and d3 * d4 != 0:
        return True
    return _collinear_overlap(a, b, c, d)


def _cross2(u, v) -> float:
    return float(u[0] * v[1] - u[1] * v[0])


def _collinear_overlap(a, b, c, d) -> bool:
    u = b - a
    if abs(_cross2(u, c - a)) > TIE_EPS or abs(_cross2(u, d - a)) > TIE_EPS:
        return False
    L2 = float(u @ u)
    t_c = float((c - a) @ u) / L2
    t_d = float((d - a) @ u) / L2
    lo, hi = min(t_c, t_d), max(t_c, t_d)
    return min(hi, 1.0) - max(lo, 0.0) > TIE_EPS


def is_extremal(graph: EmbeddedGraph, v: int) -> bool:
    """True iff vertex v lies outside the closed convex hull of its neighbors.

    Equivalent test: the direction vectors toward the neighbors all fit in a
    common open half-plane, i.e. the largest circular gap between their
    angles exceeds pi. Degree-1 vertices always qualify.
    """
    nbrs = [w for e in graph.edges for w in _edge_nbr(e, v)]
    if not nbrs:
        raise GraphValidationError(f"vertex {v} has no neighbors")
    vecs = graph.vertices[nbrs] - graph.vertices[v]
    angles = np.sort(np.arctan2(vecs[:, 1], vecs[:, 0]))
    gaps = np.diff(angles)
    wrap = angles[0] + 2.0 * math.pi - angles[-1]
    return float(max(gaps.max(initial=0.0), wrap)) > math.pi + TIE_EPS


def _edge_nbr(edge, v: int) -> Iterable[int]:
    if edge[0] == v:
        yield int(edge[1])
    elif edge[1] == v:
        yield int(edge[0])


def extremal_set(graph: EmbeddedGraph) -> list[int]:
    """Indices of extremal vertices, ascending."""
    nbr: list[list[int]] = graph.adjacency()
    out = []
    for v in range(graph.n_vertices):
        if not nbr[v]:
            continue
        vecs = graph.vertices[nbr[v]] - graph.vertices[v]
        angles = np.sort(np.arctan2(vecs[:, 1], vecs[:, 0]))
        gaps = np.diff(angles)
        wrap = angles[0] + 2.0 * math.pi - angles[-1]
        if float(max(gaps.max(initial=0.0), wrap)) > math.pi + TIE_EPS:
            out.append(v)
    return out


def closest_point(p, graph: EmbeddedGraph) -> tuple[GraphLocation, float]:
    """Closest point of the embedded graph to p, with its Euclidean distance.

    Ties are broken deterministically: smallest distance, then lowest edge
    index, then smallest parameter t. A projection within EPS of an edge
    endpoint is snapped to that vertex.
    """
    p = np.asarray(p, dtype=float)
    P = graph.vertices[graph.edges[:, 0]]
    Q = graph.vertices[graph.edges[:, 1]]
    d = Q - P
    L2 = np.einsum("ij,ij->i", d, d)
    t = np.clip(np.einsum("ij,ij->i", p - P, d) / L2, 0.0, 1.0)
    proj = P + t[:, None] * d
    dist = np.hypot(*(proj - p).T)

    best = float(dist.min())
    candidates = np.flatnonzero(dist <= best + TIE_EPS)
    # Lowest edge index, then smallest t among the tied projections.
    e = int(min(candidates, key=lambda i: (i, t[i])))
    te = float(t[e])
    q = proj[e]
    u, w = graph.edges[e]
    if np.hypot(*(q - graph.vertices[u])) <= EPS:
        loc = GraphLocation.at_vertex(int(u))
    elif np.hypot(*(q - graph.vertices[w])) <= EPS:
        loc = GraphLocation.at_vertex(int(w))
    else:
        loc = GraphLocation.on_edge(e, te, graph)
    return loc, best


def subdivide(graph: EmbeddedGraph, loc: GraphLocation) -> tuple[EmbeddedGraph, int]:
    """Ensure the location is a vertex, splitting its edge if needed.

    Returns the (possibly new) graph and the vertex index of the location.
    Existing vertex indices remain valid; a new vertex is appended at the end.
    """
    if loc.is_vertex:
        return graph, int(loc.vertex)
    u, w = graph.edges[loc.edge]
    x = graph.n_vertices
    point = loc.point(graph)
    vertices = np.vstack([graph.vertices, point[None, :]])
    edges = np.array(graph.edges, copy=True)
    edges[loc.edge] = (u, x)
    edges = np.vstack([edges, [[x, w]]])
    return EmbeddedGraph(vertices, edges), x


def height(p, omega: float) -> float:
    """Height of a point in direction omega: x*cos(omega) + y*sin(omega)."""
    p = np.asarray(p, dtype=float)
    return float(p[0] * math.cos(omega) + p[1] * math.sin(omega))


def vertex_heights(graph: EmbeddedGraph, omega: float) -> np.ndarray:
    """Heights of all vertices in direction omega."""
    return graph.vertices @ np.array([math.cos(omega), math.sin(omega)])
