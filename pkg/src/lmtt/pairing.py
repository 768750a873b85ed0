"""Mutual closest-point labeling of a pair of embedded graphs.

Each extremal vertex of one graph generates a label that lands both on
itself and on the nearest point of the other graph, subdividing an edge
there when the projection falls in the interior. The resulting common label
set covers the extremal vertices of both (augmented) graphs, which makes
the induced merge-tree labelings surjective on leaves for every direction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import geometry
from .geometry import EmbeddedGraph, closest_point, extremal_set, subdivide


@dataclass(frozen=True)
class PairLabeling:
    """Common label set over a pair of (possibly subdivided) graphs.

    Labels 0..n-1 come from the extremal vertices of the first graph,
    labels n..n+m-1 from those of the second. map1/map2 send each label to
    its vertex in g1/g2 respectively.
    """

    g1: EmbeddedGraph
    g2: EmbeddedGraph
    n: int
    m: int
    map1: np.ndarray
    map2: np.ndarray

    @property
    def n_labels(self) -> int:
        return self.n + self.m


def build_pair_labeling(G1: EmbeddedGraph, G2: EmbeddedGraph) -> PairLabeling:
    """Construct the mutual closest-point labeling of two graphs.

    Projections are computed against the original partner graph (added
    degree-2 vertices do not change the embedded point set); subdivisions
    accumulate on the augmented copies. Projections landing within the snap
    tolerance of an existing or previously added vertex reuse it.
    """
    ext1 = extremal_set(G1)
    ext2 = extremal_set(G2)
    n, m = len(ext1), len(ext2)

    g1, g2 = G1, G2
    map1 = np.empty(n + m, dtype=int)
    map2 = np.empty(n + m, dtype=int)

    for i, v in enumerate(ext1):
        map1[i] = v
        loc, _ = closest_point(G1.vertices[v], G2)
        g2, map2[i] = _place(g2, loc.point(G2))
    for j, w in enumerate(ext2):
        map2[n + j] = w
        loc, _ = closest_point(G2.vertices[w], G1)
        g1, map1[n + j] = _place(g1, loc.point(G1))
    return PairLabeling(g1=g1, g2=g2, n=n, m=m, map1=map1, map2=map2)


def _place(graph: EmbeddedGraph, point: np.ndarray) -> tuple[EmbeddedGraph, int]:
    """Locate a point known to lie on the graph, subdividing if interior."""
    d = np.hypot(*(graph.vertices - point).T)
    v = int(np.argmin(d))
    if d[v] <= geometry.EPS:
        return graph, v
    loc, _ = closest_point(point, graph)
    return subdivide(graph, loc)
