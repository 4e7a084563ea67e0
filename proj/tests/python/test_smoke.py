"""Smoke tests for the python bindings."""

import math

import pytest

import hyperlap

TOY_EDGES = [
    [1, 2], [1, 3], [3, 4], [1, 4], [3, 6], [5, 6], [4, 5], [3, 5],
    [1, 3, 4], [3, 4, 5], [3, 5, 6],
]


@pytest.fixture()
def toy():
    return hyperlap.Hypergraph(TOY_EDGES)


def test_registry_shape(toy):
    assert toy.num_vertices == 6
    assert toy.num_hyperedges == 11
    assert toy.max_dim == 2
    assert toy.count(1) == 8
    assert toy.vertex_labels() == [1, 2, 3, 4, 5, 6]
    assert toy.find([3, 1]) == toy.find([1, 3])
    assert toy.adjacent(toy.find([1, 3]), toy.find([1, 3, 4]))


def test_builtin_toy_matches(toy):
    built_in = hyperlap.toy_hypergraph()
    assert built_in.num_simplices == toy.num_simplices
    assert built_in.hyperedge_ids() == toy.hyperedge_ids()


def test_vertex_laplacian(toy):
    l0 = hyperlap.laplacian_k(toy, 0).toarray()
    assert l0.shape == (6, 6)
    assert list(l0[0]) == [5, 1, 2, 2, 0, 0]
    assert list(l0[2]) == [2, 0, 8, 3, 3, 2]


def test_block_laplacian_symmetry(toy):
    lh = hyperlap.laplacian_blocks(toy).toarray()
    assert lh.shape == (17, 17)
    assert (lh == lh.T).all()


def test_degree_centrality(toy):
    deg = hyperlap.centrality(toy, "degree")
    assert deg.scores == [7, 20, 28, 18, 19, 17, 19, 28, 32, 34, 31]
    assert deg.ranking[0] == toy.find([3, 4, 5])


def test_closeness_values(toy):
    cls = hyperlap.centrality(toy, "closeness")
    assert cls.scores[0] == pytest.approx(16.0 / 30.0)
    assert cls.scores[2] == pytest.approx(0.8)


def test_dff_reproduces_reference_values(toy):
    dff = hyperlap.centrality(toy, "dff", t=0.01, dff_distribution="all")
    expected = [1.412, 1.218, 1.123, 1.245, 1.231, 1.259, 1.231, 1.123, 1.081, 1.061, 1.092]
    assert dff.ascending
    assert dff.scores == pytest.approx(expected, abs=5e-4)


def test_sir_reproducibility(toy):
    a = hyperlap.mean_affected_scale(toy, mu=0.3, trials=50, seed=123)
    b = hyperlap.mean_affected_scale(toy, mu=0.3, trials=50, seed=123, workers=4)
    assert a["f_mean"] == b["f_mean"]
    assert a["f_u"] == b["f_u"]

    silent = hyperlap.mean_affected_scale(toy, mu=0.0, trials=5, seed=1)
    assert silent["f_mean"] == pytest.approx(1.0 / 6.0)


def test_critical_rate(toy):
    assert hyperlap.critical_infection_rate(toy) == pytest.approx(0.16504854368932038)
    assert hyperlap.edge_infection_prob(0.1, 2.0) == pytest.approx(0.19)


def test_rank_removal(toy):
    deg = hyperlap.centrality(toy, "degree")
    rep = hyperlap.part_removal_experiment(toy, deg, parts=11, trials=200, seed=77)
    assert rep["parts"] == 11
    assert len(rep["part_results"]) == 11
    assert rep["f1"] > 0
    assert -1.0 <= rep["rho_rank"] <= 1.0


def test_removal_and_stats(toy):
    smaller = toy.remove_hyperedges([toy.find([1, 3])])
    assert smaller.num_hyperedges == 10
    assert smaller.num_vertices == 6
    stats = toy.stats()
    assert stats["vertices"] == 6
    assert stats["k_avg"] == pytest.approx(34.0 / 6.0)


def test_native_round_trip(toy, tmp_path):
    path = str(tmp_path / "toy.hg")
    hyperlap.write_native(toy, path)
    back = hyperlap.read_native(path)
    assert back.num_simplices == toy.num_simplices
    assert back.hyperedge_ids() == toy.hyperedge_ids()


def test_verify_toy():
    ok, text = hyperlap.verify_toy()
    assert ok, text
    assert "toy verification passed" in text


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        hyperlap.Hypergraph([[1, 2]], vertices=[1])  # unknown vertex 2
    with pytest.raises(ValueError):
        hyperlap.read_native("/nonexistent/file.hg")
