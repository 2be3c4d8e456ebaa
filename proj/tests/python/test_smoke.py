import numpy as np
import pytest

import sproga


def two_blobs(seed=0, n=20, p=3):
    rng = np.random.default_rng(seed)
    a = rng.normal(0.0, 0.1, size=(n, p))
    b = rng.normal(0.0, 0.1, size=(n, p))
    b[:, 0] += 5.0
    return np.vstack([a, b]), [0] * n + [1] * n


def test_graph_round_trip():
    G = sproga.Graph(3, np.array([[0, 1], [1, 2]]), [1.0, 2.0])
    assert len(G) == 2
    assert G.nodes == 3
    assert G.total_weight == pytest.approx(3.0)
    np.testing.assert_array_equal(G.edges, [[0, 1], [1, 2]])


def test_two_point_midpoint():
    X = np.array([[0.0, 0.0], [2.0, 0.0]])
    G = sproga.Graph(2, np.array([[0, 1]]))
    fit = sproga.fit(X, G, lam=2.0, epsilon=1e-4, eta=1e-13, maxit=200000)
    assert fit["num_clusters"] == 1
    np.testing.assert_allclose(fit["centers"], [[1.0, 0.0], [1.0, 0.0]], atol=1e-3)


def test_two_point_shrinks_apart():
    X = np.array([[0.0], [4.0]])
    G = sproga.Graph(2, np.array([[0, 1]]))
    fit = sproga.fit(X, G, lam=0.5, epsilon=1e-6, eta=1e-13, maxit=200000)
    assert fit["num_clusters"] == 2
    np.testing.assert_allclose(fit["centers"].ravel(), [0.5, 3.5], atol=1e-3)


def test_blobs_recovered():
    X, y = two_blobs()
    G = sproga.build_graph(X, k=5, filter_pct=0.0)
    r = sproga.param_range(X, G)
    assert 0.0 < r["lambda_min"] <= r["lambda_max"]
    # No k-NN edge joins the blobs, so a large lambda can only fuse within them.
    fit = sproga.fit(X, G, lam=0.5, eta=1e-10, maxit=50000)
    assert fit["centers"].shape == X.shape
    assert sproga.adjusted_rand_index(fit["labels"], y) == pytest.approx(1.0)
    assert sproga.normalized_mutual_info(fit["labels"], y) == pytest.approx(1.0)


def test_objective_matches_formula():
    rng = np.random.default_rng(4)
    X = rng.normal(size=(4, 2))
    U = rng.normal(size=(4, 2))
    G = sproga.Graph(4, np.array([[0, 1], [1, 2], [2, 3]]), [1.0, 0.5, 2.0])
    expected = 0.5 * np.sum((X - U) ** 2)
    for (i, j), w in zip(G.edges, G.weights):
        expected += 0.7 * w * np.linalg.norm(U[i] - U[j])
    expected += 0.3 * np.linalg.norm(U, axis=0).sum()
    got = sproga.objective(X, U, G, lam=0.7, gamma=0.3)
    assert got == pytest.approx(expected, rel=1e-12)


def test_projections_land_in_balls():
    z = np.array([3.0, -1.0, 0.5])
    assert np.abs(sproga.project_l1_ball(z)).sum() == pytest.approx(1.0)
    assert np.linalg.norm(sproga.project_l2_ball(z)) == pytest.approx(1.0)
    assert np.abs(sproga.project_linf_ball(z)).max() == pytest.approx(1.0)
    np.testing.assert_allclose(sproga.project_l1_ball(z), [1.0, 0.0, 0.0])


def test_synthetic_shapes():
    X, y, informative = sproga.make_setting(1, seed=2, scale=0.25)
    assert X.shape[0] == len(y)
    assert X.shape[1] == len(informative)
    assert sum(informative) > 0


def test_feature_pd_fdr():
    pd, fdr = sproga.feature_pd_fdr([True, True, False, False], [True, False, True, False])
    assert pd == pytest.approx(0.5)
    assert fdr == pytest.approx(0.5)


def test_bad_parameters_raise_value_error():
    X, _ = two_blobs(n=5)
    G = sproga.build_graph(X, k=3)
    with pytest.raises(ValueError):
        sproga.fit(X, G, lam=-1.0)
    with pytest.raises(ValueError):
        sproga.fit(X, G, lam=1.0, q="l3")
    with pytest.raises(ValueError):
        sproga.build_graph(X, k=100)


def test_adaptive_weights_invert_center_row_norms():
    X = np.array([[1.0, 0.0], [3.0, 0.0]])
    w = sproga.adaptive_weights(X, np.array([[2.0, 0.0], [2.0, 0.0]]))
    assert w[0] == pytest.approx(1.0 / np.sqrt(8.0))
    assert w[1] > 1e6
