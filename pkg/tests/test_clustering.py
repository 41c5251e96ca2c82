"""k-means under registry divergences: Lloyd loop, repair, centroids, ARI."""

import numpy as np
import pytest

from chorddiv import (
    ClusterConfig,
    DomainError,
    InfeasibleError,
    ParameterError,
    ShapeError,
    adjusted_rand_index,
    kmeans,
    make_builtin,
    objective,
    resolve_divergence,
)
from chorddiv.clustering import _repair_empty, _update_center
from chorddiv.verify import clustering_dataset

QUAD1 = make_builtin("quadratic", 1)
QUAD2 = make_builtin("quadratic", 2)


def two_group_points(n_per_group=8, seed=3):
    rng = np.random.default_rng(seed)
    g1 = 0.1 * rng.random(n_per_group)
    g2 = 1.0 + 0.1 * rng.random(n_per_group)
    points = np.concatenate([g1, g2]).reshape(-1, 1)
    truth = np.array([0] * n_per_group + [1] * n_per_group)
    return points, truth


class TestClusterConfig:
    def test_rejects_bad_k(self):
        with pytest.raises(ParameterError):
            ClusterConfig(k=0)

    def test_rejects_bad_max_iters(self):
        with pytest.raises(ParameterError):
            ClusterConfig(k=2, max_iters=0)

    def test_rejects_bad_tolerances(self):
        with pytest.raises(ParameterError):
            ClusterConfig(k=2, centroid_tol=0.0)
        with pytest.raises(ParameterError):
            ClusterConfig(k=2, objective_tol=-1.0)


class TestObjective:
    def test_hand_value(self):
        D = resolve_divergence("bregman", QUAD1)
        pts = np.array([[0.0], [1.0], [2.0]])
        centers = np.array([[0.5], [2.0]])
        labels = np.array([0, 0, 1])
        # squared distances: 0.25 + 0.25 + 0.0
        assert objective(pts, labels, centers, D) == pytest.approx(
            0.5, abs=1e-15)

    def test_label_out_of_range(self):
        D = resolve_divergence("bregman", QUAD1)
        pts = np.array([[0.0], [1.0]])
        centers = np.array([[0.5]])
        with pytest.raises(ShapeError):
            objective(pts, np.array([0, 1]), centers, D)

    def test_label_length_mismatch(self):
        D = resolve_divergence("bregman", QUAD1)
        pts = np.array([[0.0], [1.0]])
        centers = np.array([[0.5]])
        with pytest.raises(ShapeError):
            objective(pts, np.array([0]), centers, D)


class TestRepairEmpty:
    def test_farthest_point_fills_empty_cluster(self):
        labels = np.array([0, 0, 0, 1])
        dist = np.array([5.0, 1.0, 2.0, 0.0])
        repaired = _repair_empty(labels, 3, dist)
        assert repaired.tolist() == [2, 0, 0, 1]
        # input untouched
        assert labels.tolist() == [0, 0, 0, 1]

    def test_singletons_never_donate(self):
        labels = np.array([0, 1])
        repaired = _repair_empty(labels, 3, np.array([1.0, 2.0]))
        assert repaired.tolist() == [0, 1]

    def test_two_point_cluster_donates_farther_point(self):
        labels = np.array([0, 0])
        repaired = _repair_empty(labels, 2, np.array([1.0, 3.0]))
        assert repaired.tolist() == [0, 1]

    def test_promoted_point_not_moved_again(self):
        labels = np.array([0, 0, 0, 0])
        dist = np.array([4.0, 3.0, 2.0, 1.0])
        repaired = _repair_empty(labels, 3, dist)
        # cluster 1 takes point 0, cluster 2 then takes point 1
        assert repaired.tolist() == [1, 2, 0, 0]

    def test_no_empty_clusters_is_identity(self):
        labels = np.array([0, 1, 2])
        repaired = _repair_empty(labels, 3, np.array([1.0, 1.0, 1.0]))
        assert repaired.tolist() == [0, 1, 2]


class TestUpdateCenter:
    def test_quadratic_centroid_is_mean(self):
        rng = np.random.default_rng(12)
        members = rng.uniform(-1.0, 1.0, (20, 2))
        D = resolve_divergence("bregman", QUAD2)
        center = _update_center(members, QUAD2, D, tol=1e-8)
        assert np.max(np.abs(center - members.mean(axis=0))) <= 1e-6

    def test_positive_domain_center_stays_positive(self):
        F = make_builtin("shannon_negentropy", 1)
        members = np.array([[0.2], [0.4], [0.9]])
        D = resolve_divergence("bregman", F)
        center = _update_center(members, F, D, tol=1e-8)
        assert center[0] > 0.0


class TestKMeans:
    def test_k1_quadratic_center_is_mean(self):
        rng = np.random.default_rng(23)
        pts = rng.uniform(-2.0, 2.0, (30, 2))
        res = kmeans(pts, QUAD2, ClusterConfig(k=1))
        assert np.max(np.abs(res.centers[0] - pts.mean(axis=0))) <= 1e-6
        assert set(res.assignments.tolist()) == {0}

    def test_recovers_two_groups_bregman(self):
        points, truth = clustering_dataset(seed=0)
        res = kmeans(points, QUAD1, ClusterConfig(k=2, seed=0))
        assert adjusted_rand_index(res.assignments, truth) == 1.0

    def test_recovers_two_groups_chord(self):
        points, truth = two_group_points()
        cfg = ClusterConfig(k=2, divergence="bregman_chord",
                            params={"alpha": 0.9, "beta": 1.0}, seed=0)
        res = kmeans(points, QUAD1, cfg)
        assert adjusted_rand_index(res.assignments, truth) == 1.0

    def test_fdiv_chi2_smoke(self):
        rng = np.random.default_rng(34)
        g1 = 0.5 + 0.05 * rng.random(8)
        g2 = 3.0 + 0.05 * rng.random(8)
        pts = np.concatenate([g1, g2]).reshape(-1, 1)
        truth = np.array([0] * 8 + [1] * 8)
        F = make_builtin("shannon_negentropy", 1)
        res = kmeans(pts, F, ClusterConfig(k=2, divergence="fdiv:chi2",
                                           seed=0))
        assert adjusted_rand_index(res.assignments, truth) == 1.0

    def test_trace_non_increasing(self):
        points, _ = clustering_dataset(seed=1)
        res = kmeans(points, QUAD1, ClusterConfig(k=2, seed=1))
        trace = res.objective_trace
        assert len(trace) == res.iterations + 1
        for earlier, later in zip(trace, trace[1:]):
            assert later <= earlier + 1e-8

    def test_deterministic_per_seed(self):
        points, _ = two_group_points(seed=5)
        cfg = ClusterConfig(k=2, seed=11)
        res_a = kmeans(points, QUAD1, cfg)
        res_b = kmeans(points, QUAD1, cfg)
        assert np.array_equal(res_a.assignments, res_b.assignments)
        assert np.array_equal(res_a.centers, res_b.centers)
        assert res_a.objective_trace == res_b.objective_trace

    def test_k_exceeding_distinct_points(self):
        pts = np.array([[0.0], [0.0], [1.0]])
        with pytest.raises(InfeasibleError):
            kmeans(pts, QUAD1, ClusterConfig(k=3))

    def test_duplicates_count_once_but_k_equal_distinct_works(self):
        pts = np.array([[0.0], [0.0], [1.0], [2.0]])
        res = kmeans(pts, QUAD1, ClusterConfig(k=3, seed=2))
        assert res.assignments[0] == res.assignments[1]
        assert len(set(res.assignments.tolist())) == 3

    def test_point_outside_domain(self):
        F = make_builtin("shannon_negentropy", 1)
        pts = np.array([[0.5], [-0.5]])
        with pytest.raises(DomainError):
            kmeans(pts, F, ClusterConfig(k=1))

    def test_dimension_mismatch(self):
        pts = np.array([[0.5, 1.0], [1.0, 2.0]])
        with pytest.raises(ShapeError):
            kmeans(pts, QUAD1, ClusterConfig(k=1))

    def test_empty_points(self):
        with pytest.raises(ShapeError):
            kmeans(np.empty((0, 1)), QUAD1, ClusterConfig(k=1))

    def test_final_assignment_matches_objective(self):
        points, _ = two_group_points(seed=8)
        cfg = ClusterConfig(k=2, seed=4)
        res = kmeans(points, QUAD1, cfg)
        D = resolve_divergence("bregman", QUAD1)
        recomputed = objective(points, res.assignments, res.centers, D)
        assert recomputed == pytest.approx(res.objective_trace[-1],
                                           rel=1e-12, abs=1e-12)


class TestAdjustedRandIndex:
    def test_identical_partitions(self):
        a = [0, 0, 1, 1, 2]
        assert adjusted_rand_index(a, a) == 1.0

    def test_label_permutation_invariant(self):
        a = [0, 0, 1, 1, 2]
        b = [5, 5, 9, 9, 7]
        assert adjusted_rand_index(a, b) == 1.0

    def test_crossed_pairs(self):
        assert adjusted_rand_index([0, 0, 1, 1], [0, 1, 0, 1]) == \
            pytest.approx(-0.5, abs=1e-15)

    def test_single_cluster_vs_singletons(self):
        assert adjusted_rand_index([0, 0, 0, 0], [0, 1, 2, 3]) == \
            pytest.approx(0.0, abs=1e-15)

    def test_both_single_cluster(self):
        assert adjusted_rand_index([0, 0, 0], [1, 1, 1]) == 1.0

    def test_length_mismatch(self):
        with pytest.raises(ShapeError):
            adjusted_rand_index([0, 1], [0, 1, 2])

    def test_empty(self):
        with pytest.raises(ShapeError):
            adjusted_rand_index([], [])

    def test_matches_sklearn_on_random_labelings(self):
        sklearn_metrics = pytest.importorskip("sklearn.metrics")
        rng = np.random.default_rng(45)
        for _ in range(25):
            n = int(rng.integers(5, 40))
            a = rng.integers(0, 4, n)
            b = rng.integers(0, 4, n)
            ours = adjusted_rand_index(a, b)
            theirs = sklearn_metrics.adjusted_rand_score(a, b)
            assert ours == pytest.approx(theirs, abs=1e-12)
