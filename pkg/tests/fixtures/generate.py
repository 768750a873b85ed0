"""Regenerate the committed test fixtures.

Run from the repository root:

    python3 tests/fixtures/generate.py

Deterministic (seeded); the polygon corpus and the golden CLI outputs under
goldens/ are derived from these files. Regenerate goldens afterwards via the
commands listed in goldens/README.txt.
"""

import json
import math
from pathlib import Path

import numpy as np

HERE = Path(__file__).parent


def dump(name, vertices, edges):
    path = HERE / name
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {
        "vertices": [[float(x), float(y)] for x, y in vertices],
        "edges": [[int(u), int(w)] for u, w in edges],
    }
    path.write_text(json.dumps(payload, indent=1) + "\n")


def blob(seed, k=10):
    """Near-circular k-gon with jittered radii."""
    rng = np.random.default_rng(seed)
    ang = np.linspace(0, 2 * math.pi, k, endpoint=False)
    r = 1.0 + rng.uniform(-0.08, 0.08, k)
    pts = np.column_stack([r * np.cos(ang), r * np.sin(ang)])
    return pts, [[i, (i + 1) % k] for i in range(k)]


def rect(seed):
    """Elongated rectangle with jittered corners."""
    rng = np.random.default_rng(seed)
    base = np.array([[-1.3, -0.15], [1.3, -0.15], [1.3, 0.15], [-1.3, 0.15]])
    return base + rng.uniform(-0.03, 0.03, (4, 2)), [[0, 1], [1, 2], [2, 3], [3, 0]]


def main():
    dump("segment_y0.json", [[0, 0], [1, 0]], [[0, 1]])
    dump("segment_y1.json", [[0, 1], [1, 1]], [[0, 1]])
    dump("square.json", [[0, 0], [1, 0], [1, 1], [0, 1]], [[0, 1], [1, 2], [2, 3], [3, 0]])
    dump("triangle.json", [[0, 0], [2, 0], [1, 1.5]], [[0, 1], [1, 2], [2, 0]])
    # Invalid inputs for error-path tests.
    dump("disconnected.json", [[0, 0], [1, 0], [0, 2], [1, 2]], [[0, 1], [2, 3]])
    dump("bowtie.json", [[0, 0], [2, 2], [2, 0], [0, 2]], [[0, 1], [2, 3], [0, 2], [1, 3]])
    dump("bad_edge.json", [[0, 0], [1, 0]], [[0, 5]])

    for i in range(10):
        pts, edges = blob(100 + i)
        dump(f"polygons/blob_{i:02d}.json", pts, edges)
        pts, edges = rect(200 + i)
        dump(f"polygons/rect_{i:02d}.json", pts, edges)


if __name__ == "__main__":
    main()
