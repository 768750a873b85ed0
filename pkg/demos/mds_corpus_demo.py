"""Cluster a small shape corpus: pairwise distances, then a 2-D embedding.

Uses the committed polygon corpus (ten jittered near-circles, ten jittered
elongated rectangles), computes the exact pairwise distance matrix in
parallel, and embeds it with classical MDS. The two families land in two
separated groups. Run from the repository root:

    python3 demos/mds_corpus_demo.py
"""

import time
from pathlib import Path

import numpy as np

from lmtt import classical_mds, pairwise_matrix

CORPUS = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "polygons"


def main():
    paths = sorted(CORPUS.glob("*.json"))
    print(f"corpus: {len(paths)} polygons from {CORPUS}")

    t0 = time.perf_counter()
    dm = pairwise_matrix(paths, method="exact", jobs=4)
    print(f"exact {len(paths)}x{len(paths)} matrix in "
          f"{time.perf_counter() - t0:.1f} s (4 workers)")

    blob = [i for i, n in enumerate(dm.names) if n.startswith("blob")]
    rect = [i for i, n in enumerate(dm.names) if n.startswith("rect")]
    intra_b = np.mean([dm.values[i, j] for i in blob for j in blob if i < j])
    intra_r = np.mean([dm.values[i, j] for i in rect for j in rect if i < j])
    inter = np.mean([dm.values[i, j] for i in blob for j in rect])
    print(f"mean distance within near-circles:  {intra_b:.4f}")
    print(f"mean distance within rectangles:    {intra_r:.4f}")
    print(f"mean distance between the families: {inter:.4f}")

    emb = classical_mds(dm, d=2)
    print("\n2-D classical MDS embedding:")
    for name, (x, y) in zip(emb.names, emb.coordinates):
        print(f"  {name:10s} ({x:+.3f}, {y:+.3f})")

    # Terminal scatter: B = near-circle, R = rectangle.
    coords = emb.coordinates
    span = coords.max(axis=0) - coords.min(axis=0)
    grid = [[" "] * 64 for _ in range(18)]
    for name, (x, y) in zip(emb.names, coords):
        cx = int(63 * (x - coords[:, 0].min()) / (span[0] or 1))
        cy = int(17 * (y - coords[:, 1].min()) / (span[1] or 1))
        grid[17 - cy][cx] = name[0].upper()
    print("\n" + "\n".join("".join(row) for row in grid))


if __name__ == "__main__":
    main()
