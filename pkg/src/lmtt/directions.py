"""Critical-angle partition of the circle of directions.

Every edge contributes two antipodal angles whose direction is perpendicular
to the edge. Between consecutive critical angles the combinatorial merge tree
of the graph cannot change, so one "key angle" per arc (its circular midpoint)
is enough to enumerate all tree types.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import EmbeddedGraph

TAU = 2.0 * math.pi

# Angles closer than this are treated as equal (parallel edges, float noise).
ANGLE_EPS = 1e-12


class OnCriticalAngle(ValueError):
    """Raised when an operation requires an angle strictly inside an arc."""


def normalize_angle(omega: float) -> float:
    """Reduce an angle to [0, 2*pi)."""
    w = math.fmod(omega, TAU)
    if w < 0.0:
        w += TAU
    return 0.0 if w >= TAU else w


def critical_angles(*graphs: EmbeddedGraph, tol: float = ANGLE_EPS) -> np.ndarray:
    """Sorted, deduplicated normal angles of all edges of the given graphs."""
    if not graphs:
        raise ValueError("at least one graph required")
    chunks = []
    for g in graphs:
        d = g.vertices[g.edges[:, 1]] - g.vertices[g.edges[:, 0]]
        # (cos t, sin t) perpendicular to d: (cos t, sin t) ~ (dy, -dx).
        theta = np.arctan2(-d[:, 0], d[:, 1])
        chunks.append(theta)
        chunks.append(theta + math.pi)
    angles = np.sort(np.mod(np.concatenate(chunks), TAU))
    keep = np.concatenate([[True], np.diff(angles) > tol])
    angles = angles[keep]
    # Wrap-around duplicate: last angle within tol of first + 2*pi.
    if len(angles) > 1 and angles[0] + TAU - angles[-1] <= tol:
        angles = angles[:-1]
    return angles


def key_angles(critical: np.ndarray) -> np.ndarray:
    """Circular midpoint of each arc between consecutive critical angles.

    Arc i runs from critical[i] to the next critical angle (wrapping around),
    so the output has one entry per critical angle. A single surviving
    critical angle yields its antipode (midpoint of the full circle).
    """
    critical = np.asarray(critical, dtype=float)
    if len(critical) == 0:
        raise ValueError("need at least one critical angle")
    nxt = np.roll(critical, -1)
    gaps = np.mod(nxt - critical, TAU)
    gaps[gaps <= ANGLE_EPS] = TAU  # single-angle degenerate case
    return np.mod(critical + gaps / 2.0, TAU)


@dataclass(frozen=True)
class DirectionPartition:
    """Sorted critical angles plus one key angle per circular arc."""

    critical: np.ndarray
    keys: np.ndarray

    @staticmethod
    def from_graphs(*graphs: EmbeddedGraph) -> "DirectionPartition":
        crit = critical_angles(*graphs)
        return DirectionPartition(critical=crit, keys=key_angles(crit))

    @property
    def n_arcs(self) -> int:
        return len(self.critical)

    def arc(self, i: int) -> tuple[float, float]:
        """Endpoints of arc i as (start, end) with end > start (end may exceed 2*pi)."""
        start = float(self.critical[i])
        if i + 1 < len(self.critical):
            end = float(self.critical[i + 1])
        else:
            end = float(self.critical[0]) + TAU
        if end <= start + ANGLE_EPS:
            end = start + TAU  # single critical angle: the whole circle
        return start, end


def region_of(omega: float, partition: DirectionPartition, tol: float = ANGLE_EPS) -> int:
    """Index of the open arc containing omega.

    Raises OnCriticalAngle if omega coincides with a critical angle within tol.
    """
    w = normalize_angle(omega)
    crit = partition.critical
    diff = np.abs(crit - w)
    circ = np.minimum(diff, TAU - diff)
    if float(circ.min()) <= tol:
        raise OnCriticalAngle(f"angle {omega} lies on a critical angle")
    i = int(np.searchsorted(crit, w)) - 1
    if i < 0:
        i = len(crit) - 1  # wrap-around arc
    return i
