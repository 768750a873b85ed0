"""Labeled merge tree transform distance between embedded planar graphs."""

from .directions import DirectionPartition, OnCriticalAngle, critical_angles, key_angles, region_of
from .distance import (
    LmttResult,
    bounding_radius,
    direction_distance,
    distance_function,
    lmtt_approx,
    lmtt_exact,
)
from .envelope import EnvelopePiece, Sinusoid, abs_upper_envelope, crossings, integrate_envelope
from .geometry import (
    BadEdgeIndex,
    Disconnected,
    DuplicateVertex,
    EdgesCross,
    EmbeddedGraph,
    GraphLocation,
    GraphValidationError,
    closest_point,
    extremal_set,
    height,
    is_extremal,
    subdivide,
    validate,
)
from .mergetree import LcaMatrices, MergeTree, MissingNode, build_merge_tree, lca_matrices, push_labels
from .pairing import PairLabeling, build_pair_labeling
from .workbench import (
    DimensionTooLarge,
    DistanceMatrix,
    EmbeddingCoords,
    ParseError,
    classical_mds,
    distance_curve,
    load_graph,
    pairwise_matrix,
)

__version__ = "0.1.0"
