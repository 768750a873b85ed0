import json
import math
from pathlib import Path

import numpy as np
import pytest

from lmtt import EmbeddedGraph

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def random_connected_graph(rng, n, extra=0.3) -> EmbeddedGraph:
    """Random connected graph: spanning tree over uniform points plus extras."""
    while True:
        pts = rng.uniform(-1.0, 1.0, size=(n, 2))
        d = np.hypot(*(pts[:, None, :] - pts[None, :, :]).T)
        np.fill_diagonal(d, 1.0)
        if d.min() > 1e-3:
            break
    edges = set()
    for i in range(1, n):
        edges.add((int(rng.integers(0, i)), i))
    for _ in range(int(extra * n)):
        i, j = (int(v) for v in rng.integers(0, n, size=2))
        if i != j:
            edges.add((min(i, j), max(i, j)))
    return EmbeddedGraph(pts, sorted(edges))


def segment(y: float) -> EmbeddedGraph:
    return EmbeddedGraph([[0.0, y], [1.0, y]], [[0, 1]])


def square() -> EmbeddedGraph:
    return EmbeddedGraph(
        [[0, 0], [1, 0], [1, 1], [0, 1]], [[0, 1], [1, 2], [2, 3], [3, 0]]
    )


def v_graph() -> EmbeddedGraph:
    """Two edges meeting at the origin, arms up-left and up-right."""
    return EmbeddedGraph([[0, 0], [-1, 1], [1, 1]], [[0, 1], [0, 2]])


def hexagon(with_center=False) -> EmbeddedGraph:
    pts = [
        [math.cos(k * math.pi / 3), math.sin(k * math.pi / 3)] for k in range(6)
    ]
    edges = [[k, (k + 1) % 6] for k in range(6)]
    if with_center:
        pts = pts + [[0.0, 0.0]]
        edges = edges + [[k, 6] for k in range(6)]
    return EmbeddedGraph(pts, edges)


def trapezoid(with_diagonal=False) -> EmbeddedGraph:
    pts = [[0, 0], [3, 0], [2, 1], [1, 1]]
    edges = [[0, 1], [1, 2], [2, 3], [3, 0]]
    if with_diagonal:
        edges = edges + [[1, 3]]
    return EmbeddedGraph(pts, edges)


def write_graph(path: Path, graph: EmbeddedGraph) -> None:
    path.write_text(json.dumps(graph.to_dict()))
