# -*- coding: utf-8 -*-

import math
import numpy as np
import pytest
from nodegames.graphs.graph_utils import pair_from_index, sample_gnp
from nodegames.tools.exceptions import ParameterError


def test_zero_probability_gives_empty_graph():
    g = sample_gnp(5, 0.0, 17)
    assert g.get_vertex_count() == 5
    assert g.get_edge_count() == 0


def test_probability_one_gives_complete_graph():
    g = sample_gnp(5, 1.0, 17)
    assert g.get_edge_count() == 10


@pytest.mark.parametrize("p", [-0.1, 1.5, float("nan")])
def test_probability_outside_unit_interval(p):
    with pytest.raises(ParameterError):
        sample_gnp(5, p, 1)


def test_needs_a_vertex():
    with pytest.raises(ParameterError):
        sample_gnp(0, 0.5, 1)


def test_single_vertex():
    assert sample_gnp(1, 0.5, 3).get_edge_count() == 0


@pytest.mark.parametrize("p", [0.001, 0.3])
def test_same_seed_same_graph(p):
    assert sample_gnp(500, p, 2024) == sample_gnp(500, p, 2024)


def test_different_seeds_differ():
    assert sample_gnp(500, 0.01, 1) != sample_gnp(500, 0.01, 2)


def test_pair_from_index_covers_all_pairs():
    n = 60
    u, v = pair_from_index(np.arange(n * (n - 1) // 2))
    pairs = list(zip(u.tolist(), v.tolist()))
    assert pairs == [(a, b) for b in range(n) for a in range(b)]


def test_pair_from_index_large_positions():
    n = 1000000
    v = np.array([n - 1, 500000, 123457], dtype=np.int64)
    u = np.array([n - 2, 0, 99], dtype=np.int64)
    positions = v * (v - 1) // 2 + u
    smaller, larger = pair_from_index(positions)
    assert smaller.tolist() == u.tolist()
    assert larger.tolist() == v.tolist()


def test_sparse_edges_are_simple():
    g = sample_gnp(3000, 0.002, 5)
    edges = g.edges()
    assert (edges[:, 0] < edges[:, 1]).all()
    assert np.unique(edges, axis=0).shape[0] == edges.shape[0]


def test_mean_edge_count_small_ensemble():
    n, p, samples = 2000, 0.005, 100
    counts = np.array([sample_gnp(n, p, seed).get_edge_count() for seed in range(samples)])
    pairs = n * (n - 1) / 2
    stderr = math.sqrt(pairs * p * (1 - p) / samples)
    assert abs(counts.mean() - pairs * p) < 4 * stderr


@pytest.mark.slow
def test_mean_edge_count_matches_binomial_mean():
    n, p, samples = 10000, 5e-4, 2000
    counts = np.array([sample_gnp(n, p, seed).get_edge_count() for seed in range(samples)])
    pairs = n * (n - 1) / 2
    stderr = math.sqrt(pairs * p * (1 - p) / samples)
    assert abs(counts.mean() - 24997.5) < 3 * stderr
