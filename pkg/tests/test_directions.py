import math

import numpy as np
import pytest

from lmtt import EmbeddedGraph, OnCriticalAngle, critical_angles, key_angles, region_of
from lmtt.directions import TAU, DirectionPartition, normalize_angle
from conftest import random_connected_graph, square


def rotated(graph, rho):
    c, s = math.cos(rho), math.sin(rho)
    R = np.array([[c, -s], [s, c]])
    return EmbeddedGraph(graph.vertices @ R.T, graph.edges)


class TestCriticalAngles:
    def test_axis_aligned_square(self):
        crit = critical_angles(square())
        assert crit == pytest.approx([0, math.pi / 2, math.pi, 3 * math.pi / 2])

    def test_diagonal_segment(self):
        g = EmbeddedGraph([[0, 0], [1, 1]], [[0, 1]])
        assert critical_angles(g) == pytest.approx([3 * math.pi / 4, 7 * math.pi / 4])

    def test_union_of_two_squares(self):
        crit = critical_angles(square(), rotated(square(), math.pi / 4))
        assert crit == pytest.approx(np.arange(8) * math.pi / 4)

    def test_at_most_two_per_edge(self):
        rng = np.random.default_rng(1)
        for _ in range(10):
            g = random_connected_graph(rng, 9)
            assert len(critical_angles(g)) <= 2 * g.n_edges

    def test_translation_invariant(self):
        g = square()
        shifted = EmbeddedGraph(g.vertices + [3.2, -1.7], g.edges)
        assert critical_angles(shifted) == pytest.approx(critical_angles(g))

    def test_rotation_equivariant(self):
        rng = np.random.default_rng(8)
        g = random_connected_graph(rng, 7)
        rho = 0.37
        base = critical_angles(g)
        rot = critical_angles(rotated(g, rho))
        expected = np.sort(np.mod(base + rho, TAU))
        assert rot == pytest.approx(expected)

    def test_parallel_edges_deduplicated(self):
        g = EmbeddedGraph(
            [[0, 0], [1, 0], [1, 1], [2, 1]], [[0, 1], [1, 2], [2, 3]]
        )
        assert len(critical_angles(g)) == 4  # two parallel horizontals collapse


class TestKeyAngles:
    def test_two_angles(self):
        assert key_angles(np.array([0.0, math.pi])) == pytest.approx(
            [math.pi / 2, 3 * math.pi / 2]
        )

    def test_four_angles(self):
        crit = np.arange(4) * math.pi / 2
        assert key_angles(crit) == pytest.approx(np.arange(4) * math.pi / 2 + math.pi / 4)

    def test_single_angle_gives_antipode(self):
        assert key_angles(np.array([0.0])) == pytest.approx([math.pi])

    def test_keys_inside_their_arcs(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            g = random_connected_graph(rng, 8)
            part = DirectionPartition.from_graphs(g)
            assert len(part.keys) == len(part.critical)
            for k in range(part.n_arcs):
                start, end = part.arc(k)
                w = float(part.keys[k])
                if w < start:
                    w += TAU
                assert start < w < end


class TestRegionOf:
    part = DirectionPartition(
        critical=np.arange(4) * math.pi / 2,
        keys=np.arange(4) * math.pi / 2 + math.pi / 4,
    )

    def test_first_arc(self):
        assert region_of(math.pi / 4, self.part) == 0

    def test_wraparound_arc(self):
        assert region_of(7 * math.pi / 4, self.part) == 3

    def test_on_critical_angle(self):
        with pytest.raises(OnCriticalAngle):
            region_of(math.pi / 2, self.part)

    def test_normalizes_input(self):
        assert region_of(math.pi / 4 + TAU, self.part) == 0


def test_normalize_angle():
    assert normalize_angle(-math.pi / 2) == pytest.approx(3 * math.pi / 2)
    assert normalize_angle(TAU) == 0.0
    assert normalize_angle(5 * TAU + 0.25) == pytest.approx(0.25)
