"""Sublevel-set merge trees of embedded graphs for a fixed direction.

A tree node records its height (the direction-projected coordinate of the
graph vertex that created it), its parent, and that source vertex. The root
is a sentinel at height +infinity. Nodes exist for birth vertices (no lower
neighbor), merge vertices (joining two or more sublevel components), and any
explicitly requested vertices (used to attach labels to regular points).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .geometry import EmbeddedGraph, vertex_heights

NO_PARENT = -1
NO_SOURCE = -1


class MissingNode(KeyError):
    """A labeled graph vertex has no corresponding tree node."""


@dataclass
class MergeTree:
    """Rooted merge tree with node heights and generating graph vertices."""

    heights: np.ndarray  # float, +inf at the root
    parents: np.ndarray  # int, NO_PARENT at the root
    sources: np.ndarray  # int graph vertex, NO_SOURCE at the root
    root: int

    @property
    def n_nodes(self) -> int:
        return len(self.heights)

    def children(self) -> list[list[int]]:
        ch: list[list[int]] = [[] for _ in range(self.n_nodes)]
        for v, p in enumerate(self.parents):
            if p != NO_PARENT:
                ch[p].append(v)
        return ch

    def leaves(self) -> list[int]:
        """Non-root nodes with no children, ascending node index."""
        has_child = np.zeros(self.n_nodes, dtype=bool)
        ok = self.parents != NO_PARENT
        has_child[self.parents[ok]] = True
        return [v for v in range(self.n_nodes) if not has_child[v] and v != self.root]

    def leaf_sources(self) -> set[int]:
        return {int(self.sources[v]) for v in self.leaves()}

    def to_dict(self) -> dict:
        return {
            "nodes": [
                {
                    "height": None if math.isinf(h) else float(h),
                    "parent": int(p),
                    "source": int(s),
                }
                for h, p, s in zip(self.heights, self.parents, self.sources)
            ],
            "root": int(self.root),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


class _Builder:
    def __init__(self) -> None:
        self.heights: list[float] = []
        self.parents: list[int] = []
        self.sources: list[int] = []

    def add(self, h: float, source: int) -> int:
        self.heights.append(h)
        self.parents.append(NO_PARENT)
        self.sources.append(source)
        return len(self.heights) - 1


def build_merge_tree(
    graph: EmbeddedGraph, omega: float, keep_vertices=()
) -> MergeTree:
    """Merge tree of the sublevel filtration of f_omega on a connected graph.

    Vertices are swept in ascending (height, index) order, tracking connected
    components with union-find. A vertex with no lower neighbor births a leaf;
    one joining k >= 2 components creates a single merge node. Vertices in
    ``keep_vertices`` always receive a node, so labels can attach to regular
    points. Callers must keep omega off the graph's critical angles.
    """
    n = graph.n_vertices
    h = vertex_heights(graph, omega)
    order = np.lexsort((np.arange(n), h))
    rank = np.empty(n, dtype=int)
    rank[order] = np.arange(n)
    adj = graph.adjacency()
    keep = set(int(v) for v in keep_vertices)

    parent = np.arange(n)

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    out = _Builder()
    comp_node: dict[int, int] = {}  # union-find root -> current tree node

    for v in map(int, order):
        roots = sorted({find(u) for u in adj[v] if rank[u] < rank[v]})
        if not roots:
            node = out.add(float(h[v]), v)  # birth: new sublevel component
        elif len(roots) == 1 and v not in keep:
            node = comp_node.pop(roots[0])  # regular vertex, no node needed
        else:
            node = out.add(float(h[v]), v)  # merge node (or kept regular vertex)
            for r in roots:
                out.parents[comp_node.pop(r)] = node
        for r in roots:
            parent[r] = v
        comp_node[v] = node

    if len(comp_node) != 1:
        raise ValueError("graph is not connected")
    top = comp_node.popitem()[1]
    root = out.add(math.inf, NO_SOURCE)
    out.parents[top] = root
    return MergeTree(
        heights=np.array(out.heights),
        parents=np.array(out.parents, dtype=int),
        sources=np.array(out.sources, dtype=int),
        root=root,
    )


def push_labels(tree: MergeTree, label_vertices) -> np.ndarray:
    """Map label ids to tree nodes via their labeled graph vertices.

    ``label_vertices[i]`` is the graph vertex carrying label i. Each labeled
    vertex must have a node in the tree (guaranteed when the tree was built
    with those vertices in ``keep_vertices``).
    """
    source_node = {int(s): i for i, s in enumerate(tree.sources) if s != NO_SOURCE}
    nodes = []
    for i, v in enumerate(label_vertices):
        node = source_node.get(int(v))
        if node is None:
            raise MissingNode(f"label {i}: graph vertex {v} has no tree node")
        nodes.append(node)
    return np.array(nodes, dtype=int)


@dataclass
class LcaMatrices:
    """Pairwise LCA heights of labeled nodes, with the generating vertices.

    heights[i, j] is the height of the lowest common ancestor of labels i and
    j (a node is its own ancestor, so the diagonal holds the labels' own node
    heights). sources[i, j] is the graph vertex generating that LCA.
    """

    heights: np.ndarray
    sources: np.ndarray


def lca_matrices(tree: MergeTree, label_nodes: np.ndarray) -> LcaMatrices:
    """All-pairs LCA heights and sources for the given labeled nodes.

    Single bottom-up pass: label sets of sibling subtrees meet exactly at
    their parent, so each node fills the matrix blocks between its own labels
    and its children's accumulated label sets.
    """
    label_nodes = np.asarray(label_nodes, dtype=int)
    N = len(label_nodes)
    H = np.full((N, N), np.nan)
    S = np.full((N, N), NO_SOURCE, dtype=int)

    node_labels: list[list[int]] = [[] for _ in range(tree.n_nodes)]
    for lab, nd in enumerate(label_nodes):
        node_labels[nd].append(lab)

    children = tree.children()
    # Iterative post-order from the root.
    post: list[int] = []
    stack = [tree.root]
    while stack:
        v = stack.pop()
        post.append(v)
        stack.extend(children[v])
    post.reverse()

    subtree: list[np.ndarray] = [np.empty(0, dtype=int)] * tree.n_nodes
    for v in post:
        if v == tree.root:
            continue
        own = np.array(node_labels[v], dtype=int)
        groups = [subtree[c] for c in children[v]]
        h, src = float(tree.heights[v]), int(tree.sources[v])
        if len(own):
            below = (
                np.concatenate(groups) if groups else np.empty(0, dtype=int)
            )
            both = np.concatenate([own, below])
            H[np.ix_(own, both)] = h
            H[np.ix_(both, own)] = h
            S[np.ix_(own, both)] = src
            S[np.ix_(both, own)] = src
        for i in range(len(groups)):
            for j in range(i + 1, len(groups)):
                H[np.ix_(groups[i], groups[j])] = h
                H[np.ix_(groups[j], groups[i])] = h
                S[np.ix_(groups[i], groups[j])] = src
                S[np.ix_(groups[j], groups[i])] = src
        subtree[v] = np.concatenate([own] + groups) if groups or len(own) else own

    if np.isnan(H).any():
        raise ValueError("labels are not connected below the root")
    return LcaMatrices(heights=H, sources=S)
