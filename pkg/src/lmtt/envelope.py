"""Upper envelope of the absolute values of sinusoids over an angle interval.

Every curve has the form a*sin(w) + b*cos(w). Absolute values are handled by
doubling to the signed family {+c, -c}: |c1| = |c2| events are exactly the
crossings c1 = c2 and c1 = -c2, and a curve's own sign changes are its
crossings with its negation. The envelope is found by an event sweep: collect
all crossing angles in the interval, cut it into elementary sub-intervals,
and decide the active signed curve at each midpoint. Integration of the
resulting pieces is closed-form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Events closer than this are coalesced into one cut point.
EVENT_EPS = 1e-12


@dataclass(frozen=True)
class Sinusoid:
    """The curve w -> a*sin(w) + b*cos(w)."""

    a: float
    b: float

    def __call__(self, omega):
        return self.a * np.sin(omega) + self.b * np.cos(omega)

    @property
    def amplitude(self) -> float:
        return math.hypot(self.a, self.b)


@dataclass(frozen=True)
class EnvelopePiece:
    """One maximal sub-interval where a single signed curve is the envelope."""

    start: float
    end: float
    curve: int
    sign: int


def crossings(c1: Sinusoid, c2: Sinusoid, interval: tuple[float, float]) -> list[float]:
    """Angles in the open interval where the two curves are equal.

    Solves (a1-a2)*sin(w) + (b1-b2)*cos(w) = 0; identical curves are treated
    as never crossing.
    """
    da, db = c1.a - c2.a, c1.b - c2.b
    if abs(da) <= EVENT_EPS and abs(db) <= EVENT_EPS:
        return []
    alpha, beta = interval
    # tan(w) = -db/da, robust in all quadrants.
    w0 = math.atan2(-db, da)
    k0 = math.ceil((alpha - w0) / math.pi)
    out = []
    k = k0
    while True:
        w = w0 + k * math.pi
        if w >= beta:
            break
        if w > alpha:
            out.append(w)
        k += 1
    return out


def _crossing_events(A: np.ndarray, B: np.ndarray, alpha: float, beta: float) -> np.ndarray:
    """All |c_i| = |c_j| event angles (i <= j) inside (alpha, beta), vectorized.

    The diagonal pairs contribute each curve's own zeros (sign changes).
    """
    i, j = np.triu_indices(len(A))
    # c_i = c_j (off-diagonal) and c_i = -c_j (incl. i == j: zeros of c_i).
    da = np.concatenate([A[i] - A[j], A[i] + A[j]])
    db = np.concatenate([B[i] - B[j], B[i] + B[j]])
    keep = (np.abs(da) > EVENT_EPS) | (np.abs(db) > EVENT_EPS)
    da, db = da[keep], db[keep]
    if len(da) == 0:
        return np.empty(0)
    w0 = np.arctan2(-db, da)
    # Shift each root family w0 + k*pi into (alpha, beta).
    kmin = np.ceil((alpha - w0) / math.pi).astype(int)
    kmax = np.floor((beta - w0) / math.pi).astype(int)
    events = []
    span = int((beta - alpha) / math.pi) + 1
    for s in range(span + 1):
        k = kmin + s
        ok = k <= kmax
        w = w0[ok] + k[ok] * math.pi
        inside = (w > alpha + EVENT_EPS) & (w < beta - EVENT_EPS)
        events.append(w[inside])
    return np.concatenate(events) if events else np.empty(0)


def abs_upper_envelope(
    curves: list[Sinusoid], interval: tuple[float, float]
) -> list[EnvelopePiece]:
    """Piecewise decomposition of max_i |curves[i]| over the interval.

    Returns ordered, contiguous pieces covering [alpha, beta]; on each piece
    the recorded (curve, sign) attains the maximum. Ties go to the lowest
    curve index; the active curve on each elementary sub-interval is decided
    at its midpoint.
    """
    if not curves:
        raise ValueError("need at least one curve")
    alpha, beta = float(interval[0]), float(interval[1])
    if not beta > alpha:
        raise ValueError("empty interval")
    A = np.array([c.a for c in curves])
    B = np.array([c.b for c in curves])

    events = np.sort(_crossing_events(A, B, alpha, beta))
    cuts = [alpha]
    for w in events:
        if w - cuts[-1] > EVENT_EPS:
            cuts.append(float(w))
    cuts.append(beta)

    mids = (np.array(cuts[:-1]) + np.array(cuts[1:])) / 2.0
    vals = np.abs(np.outer(A, np.sin(mids)) + np.outer(B, np.cos(mids)))
    active = np.argmax(vals, axis=0)  # argmax returns the lowest tied index
    raw = A[active] * np.sin(mids) + B[active] * np.cos(mids)
    signs = np.where(raw >= 0.0, 1, -1)

    pieces: list[EnvelopePiece] = []
    for k in range(len(mids)):
        idx, sg = int(active[k]), int(signs[k])
        if pieces and pieces[-1].curve == idx and pieces[-1].sign == sg:
            pieces[-1] = EnvelopePiece(pieces[-1].start, cuts[k + 1], idx, sg)
        else:
            pieces.append(EnvelopePiece(cuts[k], cuts[k + 1], idx, sg))
    return pieces


def integrate_envelope(pieces: list[EnvelopePiece], curves: list[Sinusoid]) -> float:
    """Closed-form integral of the envelope decomposition.

    Uses the antiderivative sign * (-a*cos(w) + b*sin(w)) per piece.
    """
    total = 0.0
    for p in pieces:
        c = curves[p.curve]
        anti = lambda w: -c.a * math.cos(w) + c.b * math.sin(w)
        total += p.sign * (anti(p.end) - anti(p.start))
    return total
