# -*- coding: utf-8 -*-

from itertools import combinations
import networkx as nx
import pytest
from nodegames.census.blocking_star import BlockingStar
from nodegames.census.census_utils import count_blocking_stars, find_blocking_stars
from nodegames.dynamics.tests.suites import atlas_graphs
from nodegames.graphs.graph import Graph
from nodegames.graphs.graph_utils import sample_gnp
from nodegames.tools.exceptions import ParameterError

SHAPES = [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (3, 1)]


def _brute_force(g, ell, k):
    reference = nx.Graph()
    reference.add_nodes_from(range(g.get_vertex_count()))
    reference.add_edges_from(g.edges().tolist())
    stars = set()
    for centre in reference.nodes:
        if reference.degree(centre) != ell + k:
            continue
        others = [v for v in reference.nodes if v != centre]
        for leaves in combinations(others, ell):
            if not all(reference.has_edge(centre, v) and reference.degree(v) == 1 for v in leaves):
                continue
            rest = [v for v in others if v not in leaves]
            for connectors in combinations(rest, k):
                if all(reference.has_edge(centre, v) for v in connectors):
                    stars.add((centre, leaves, connectors))
    return stars


def _as_tuples(stars):
    return {(star.center, star.blocking_leaves, star.connectors) for star in stars}


def test_path_has_two_stars(path_graph):
    stars = find_blocking_stars(path_graph, 1, 1)
    assert stars == [BlockingStar(1, (0,), (2,)), BlockingStar(2, (3,), (1,))]


def test_complete_graph_has_none(complete_graph_k4):
    for ell, k in SHAPES:
        assert find_blocking_stars(complete_graph_k4, ell, k) == []


def test_star_with_spare_leaves(star_k15):
    stars = find_blocking_stars(star_k15, 2, 3)
    assert len(stars) == 10
    assert all(star.ell == 2 and star.k == 3 for star in stars)
    assert count_blocking_stars(star_k15, 2, 3) == 10


def test_isolated_edge_is_counted_from_both_ends():
    g = Graph.from_edge_list(2, [(0, 1)])
    assert _as_tuples(find_blocking_stars(g, 1, 0)) == {(0, (1,), ()), (1, (0,), ())}


def test_agrees_with_brute_force_on_small_graphs():
    for g in atlas_graphs(6):
        for ell, k in SHAPES:
            assert _as_tuples(find_blocking_stars(g, ell, k)) == _brute_force(g, ell, k)


def test_agrees_with_brute_force_on_random_graphs():
    for seed in range(60):
        g = sample_gnp(8, 0.3, seed)
        for ell, k in SHAPES:
            stars = find_blocking_stars(g, ell, k)
            assert _as_tuples(stars) == _brute_force(g, ell, k)
            assert count_blocking_stars(g, ell, k) == len(stars)


def test_star_export(path_graph):
    star = find_blocking_stars(path_graph, 1, 1)[0]
    assert star.to_dict() == {"center": 1, "leaves": [0], "connectors": [2]}
    assert star.vertices() == (1, 0, 2)


@pytest.mark.parametrize("ell, k", [(0, 1), (1, -1)])
def test_bad_shape(path_graph, ell, k):
    with pytest.raises(ParameterError):
        find_blocking_stars(path_graph, ell, k)
