import math

import numpy as np
import pytest

from lmtt import (
    Disconnected,
    DistanceMatrix,
    ParseError,
    classical_mds,
    distance_curve,
    lmtt_exact,
    load_graph,
    pairwise_matrix,
)
from lmtt.workbench import (
    DimensionTooLarge,
    curve_csv_text,
    embedding_csv_text,
    matrix_csv_text,
    read_matrix_csv,
    write_matrix_csv,
)
from conftest import FIXTURES, segment, square, write_graph


class TestLoadGraph:
    def test_valid_file(self):
        g = load_graph(FIXTURES / "square.json")
        assert g.n_vertices == 4 and g.n_edges == 4

    def test_invalid_json(self, tmp_path):
        p = tmp_path / "broken.json"
        p.write_text("{not json")
        with pytest.raises(ParseError, match="broken.json"):
            load_graph(p)

    def test_missing_keys(self, tmp_path):
        p = tmp_path / "empty.json"
        p.write_text("{}")
        with pytest.raises(ParseError):
            load_graph(p)

    def test_validation_error_includes_path(self):
        with pytest.raises(Disconnected, match="disconnected.json"):
            load_graph(FIXTURES / "disconnected.json")


class TestPairwiseMatrix:
    def test_small_corpus_serial(self):
        paths = [FIXTURES / n for n in ["segment_y0.json", "segment_y1.json"]]
        dm = pairwise_matrix(paths, jobs=1)
        assert dm.names == ["segment_y0", "segment_y1"]
        assert dm.values[0, 0] == 0.0
        assert dm.values[0, 1] == pytest.approx(2 / math.pi)
        assert dm.values[0, 1] == dm.values[1, 0]

    def test_parallel_matches_serial(self, tmp_path):
        rng = np.random.default_rng(70)
        from conftest import random_connected_graph

        paths = []
        for i in range(4):
            p = tmp_path / f"g{i}.json"
            write_graph(p, random_connected_graph(rng, 6))
            paths.append(p)
        serial = pairwise_matrix(paths, jobs=1)
        parallel = pairwise_matrix(paths, jobs=2)
        assert parallel.values == pytest.approx(serial.values, abs=1e-12)

    def test_approx_method(self):
        paths = [FIXTURES / n for n in ["segment_y0.json", "segment_y1.json"]]
        dm = pairwise_matrix(paths, method="approx", samples=500, jobs=1)
        assert dm.values[0, 1] == pytest.approx(2 / math.pi, abs=1e-3)

    def test_bad_file_fails_batch(self):
        paths = [FIXTURES / "square.json", FIXTURES / "disconnected.json"]
        with pytest.raises(Disconnected):
            pairwise_matrix(paths, jobs=1)

    def test_too_few_inputs(self):
        with pytest.raises(ValueError):
            pairwise_matrix([FIXTURES / "square.json"])

    def test_unknown_method(self):
        paths = [FIXTURES / "segment_y0.json", FIXTURES / "segment_y1.json"]
        with pytest.raises(ValueError):
            pairwise_matrix(paths, method="magic")


class TestClassicalMds:
    def test_equilateral_triangle(self):
        D = np.ones((3, 3)) - np.eye(3)
        emb = classical_mds(DistanceMatrix(["a", "b", "c"], D), d=2)
        X = emb.coordinates
        for i in range(3):
            for j in range(i + 1, 3):
                assert np.hypot(*(X[i] - X[j])) == pytest.approx(1.0, abs=1e-6)

    def test_recovers_line(self):
        pts = np.array([0.0, 1.0, 3.0, 6.0])
        D = np.abs(pts[:, None] - pts[None, :])
        emb = classical_mds(DistanceMatrix(list("abcd"), D), d=1)
        x = emb.coordinates[:, 0]
        assert np.abs(x[:, None] - x[None, :]) == pytest.approx(D, abs=1e-9)

    def test_sign_canonical(self):
        D = np.abs(np.arange(4)[:, None] - np.arange(4)[None, :]).astype(float)
        emb = classical_mds(DistanceMatrix(list("abcd"), D), d=1)
        col = emb.coordinates[:, 0]
        assert col[np.argmax(np.abs(col))] > 0

    def test_dimension_too_large(self):
        D = np.ones((3, 3)) - np.eye(3)
        with pytest.raises(DimensionTooLarge):
            classical_mds(DistanceMatrix(list("abc"), D), d=3)


class TestDistanceCurve:
    def test_translated_segments_curve(self):
        table = distance_curve(segment(0.0), segment(1.0), resolution=16)
        assert table.shape[1] == 2
        ws, vals = table[:, 0], table[:, 1]
        assert np.all(np.diff(ws) >= 0)
        assert vals == pytest.approx(np.abs(np.sin(ws)), abs=1e-6)

    def test_average_matches_exact(self):
        g1, g2 = square(), segment(0.5)
        table = distance_curve(g1, g2, resolution=256)
        mean = float(np.mean(table[:, 1]))
        assert mean == pytest.approx(lmtt_exact(g1, g2).distance, abs=1e-2)


class TestCsvRoundTrips:
    def test_matrix_round_trip(self, tmp_path):
        dm = DistanceMatrix(["x", "y"], np.array([[0.0, 1.25], [1.25, 0.0]]))
        p = tmp_path / "m.csv"
        write_matrix_csv(dm, p)
        back = read_matrix_csv(p)
        assert back.names == dm.names
        assert back.values == pytest.approx(dm.values)

    def test_matrix_full_precision(self):
        v = 2 / math.pi
        dm = DistanceMatrix(["x", "y"], np.array([[0.0, v], [v, 0.0]]))
        text = matrix_csv_text(dm)
        assert repr(v)[:17] in text or "%.17g" % v in text

    def test_read_matrix_rejects_garbage(self, tmp_path):
        p = tmp_path / "bad.csv"
        p.write_text("foo,bar\n1,2\n")
        with pytest.raises(ParseError):
            read_matrix_csv(p)

    def test_read_matrix_rejects_ragged(self, tmp_path):
        p = tmp_path / "ragged.csv"
        p.write_text("name,a,b\na,0,1\n")
        with pytest.raises(ParseError):
            read_matrix_csv(p)

    def test_curve_csv_header(self):
        table = np.array([[0.0, 1.0], [1.0, 0.5]])
        lines = curve_csv_text(table).splitlines()
        assert lines[0] == "omega,distance"
        assert len(lines) == 3

    def test_embedding_csv_header(self):
        emb = classical_mds(
            DistanceMatrix(list("abc"), np.ones((3, 3)) - np.eye(3)), d=2
        )
        lines = embedding_csv_text(emb).splitlines()
        assert lines[0] == "name,c1,c2"
        assert len(lines) == 4
