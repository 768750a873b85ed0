"""Corpus-level workflows: graph ingestion, pairwise distance matrices,
distance-curve export, and classical multidimensional scaling.

Graph files are JSON objects with "vertices" (list of [x, y]) and "edges"
(list of [u, v] 0-based index pairs). Matrices, curves, and embeddings are
written as CSV with full-precision decimals.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .directions import DirectionPartition
from .distance import (
    ARC_INSET,
    _arc_coefficients,
    lmtt_approx,
    lmtt_exact,
)
from .geometry import EmbeddedGraph, GraphValidationError, validate
from .pairing import build_pair_labeling

FLOAT_FMT = "%.17g"


class ParseError(ValueError):
    pass


class DimensionTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class DistanceMatrix:
    names: list[str]
    values: np.ndarray


@dataclass(frozen=True)
class EmbeddingCoords:
    names: list[str]
    coordinates: np.ndarray


def load_graph(path) -> EmbeddedGraph:
    """Load and validate an embedded graph from a JSON file."""
    path = Path(path)
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise ParseError(f"{path}: expected an object with 'vertices' and 'edges'")
    try:
        graph = EmbeddedGraph(data["vertices"], data["edges"])
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{path}: malformed vertex or edge data ({exc})") from exc
    try:
        validate(graph)
    except GraphValidationError as exc:
        raise type(exc)(f"{path}: {exc}") from exc
    return graph


def _pair_distance(args):
    i, j, d1, d2, method, samples = args
    g1 = EmbeddedGraph.from_dict(d1)
    g2 = EmbeddedGraph.from_dict(d2)
    if method == "exact":
        value = lmtt_exact(g1, g2).distance
    else:
        value = lmtt_approx(g1, g2, samples).distance
    return i, j, value


def pairwise_matrix(
    paths: Sequence,
    method: str = "exact",
    samples: int = 1000,
    jobs: int | None = None,
) -> DistanceMatrix:
    """All-pairs LMTT distances for a list of graph files.

    Every file is loaded and validated up front so a bad input fails the
    whole batch with its path. Unordered pairs are computed once, optionally
    across processes; results are assembled by index, so the output does not
    depend on scheduling.
    """
    paths = [Path(p) for p in paths]
    if len(paths) < 2:
        raise ValueError("need at least two graph files")
    if method not in ("exact", "approx"):
        raise ValueError(f"unknown method {method!r}")
    graphs = [load_graph(p) for p in paths]
    names = [p.stem for p in paths]

    k = len(graphs)
    values = np.zeros((k, k))
    tasks = [
        (i, j, graphs[i].to_dict(), graphs[j].to_dict(), method, samples)
        for i in range(k)
        for j in range(i + 1, k)
    ]
    if jobs is None:
        jobs = min(4, os.cpu_count() or 1)
    if jobs <= 1 or len(tasks) <= 1:
        results = map(_pair_distance, tasks)
    else:
        pool = ProcessPoolExecutor(max_workers=jobs)
        try:
            results = list(pool.map(_pair_distance, tasks, chunksize=4))
        finally:
            pool.shutdown()
    for i, j, value in results:
        values[i, j] = values[j, i] = value
    return DistanceMatrix(names=names, values=values)


def classical_mds(dm: DistanceMatrix, d: int = 2) -> EmbeddingCoords:
    """Classical (Torgerson) MDS embedding of a distance matrix.

    Double-centers the squared distances, takes the top-d eigenpairs of the
    resulting Gram matrix, and clamps negative eigenvalues to zero. Each axis
    is sign-canonicalized so its largest-magnitude coordinate is positive.
    """
    D = np.asarray(dm.values, dtype=float)
    k = len(D)
    if d < 1:
        raise ValueError("dimension must be >= 1")
    if d > k - 1:
        raise DimensionTooLarge(f"dimension {d} too large for {k} items")
    J = np.eye(k) - np.ones((k, k)) / k
    B = -0.5 * J @ (D**2) @ J
    evals, evecs = np.linalg.eigh(B)
    order = np.argsort(evals)[::-1][:d]
    lam = np.clip(evals[order], 0.0, None)
    coords = evecs[:, order] * np.sqrt(lam)
    for axis in range(d):
        col = coords[:, axis]
        if len(col) and col[np.argmax(np.abs(col))] < 0:
            coords[:, axis] = -col
    return EmbeddingCoords(names=list(dm.names), coordinates=coords)


def distance_curve(
    G1: EmbeddedGraph, G2: EmbeddedGraph, resolution: int = 32
) -> np.ndarray:
    """Sampled per-direction distance, shaped (k, 2) as (omega, value) rows.

    Each arc between critical angles contributes `resolution` interior points
    plus both arc endpoints nudged inward, so plots show the discontinuities.
    """
    validate(G1)
    validate(G2)
    pl = build_pair_labeling(G1, G2)
    partition = DirectionPartition.from_graphs(pl.g1, pl.g2)
    rows = []
    for start, end, a, b in _arc_coefficients(pl, partition):
        ws = np.linspace(start + ARC_INSET, end - ARC_INSET, resolution + 2)
        av, bv = a.ravel()[:, None], b.ravel()[:, None]
        F = np.max(np.abs(av * np.sin(ws) + bv * np.cos(ws)), axis=0)
        rows.append(np.column_stack([np.mod(ws, 2.0 * math.pi), F]))
    table = np.vstack(rows)
    return table[np.argsort(table[:, 0], kind="stable")]


# ---------------------------------------------------------------------------
# CSV formats


def matrix_csv_text(dm: DistanceMatrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["name"] + dm.names)
    for name, row in zip(dm.names, dm.values):
        writer.writerow([name] + [FLOAT_FMT % v for v in row])
    return buf.getvalue()


def write_matrix_csv(dm: DistanceMatrix, path) -> None:
    Path(path).write_text(matrix_csv_text(dm))


def read_matrix_csv(path) -> DistanceMatrix:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0][:1] != ["name"]:
        raise ParseError(f"{path}: expected a 'name' header row")
    names = rows[0][1:]
    body = rows[1:]
    if len(body) != len(names):
        raise ParseError(f"{path}: matrix body does not match header size")
    values = np.array([[float(v) for v in row[1:]] for row in body])
    if values.shape != (len(names), len(names)):
        raise ParseError(f"{path}: matrix is not square")
    return DistanceMatrix(names=names, values=values)


def curve_csv_text(table: np.ndarray) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["omega", "distance"])
    for omega, value in table:
        writer.writerow([FLOAT_FMT % omega, FLOAT_FMT % value])
    return buf.getvalue()


def write_curve_csv(table: np.ndarray, path) -> None:
    Path(path).write_text(curve_csv_text(table))


def embedding_csv_text(emb: EmbeddingCoords) -> str:
    d = emb.coordinates.shape[1]
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["name"] + [f"c{i + 1}" for i in range(d)])
    for name, row in zip(emb.names, emb.coordinates):
        writer.writerow([name] + [FLOAT_FMT % v for v in row])
    return buf.getvalue()


def write_embedding_csv(emb: EmbeddingCoords, path) -> None:
    Path(path).write_text(embedding_csv_text(emb))
