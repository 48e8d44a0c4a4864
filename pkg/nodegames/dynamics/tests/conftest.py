# -*- coding: utf-8 -*-

import pytest
from nodegames.dynamics.tests.suites import degenerate_suite, non_degenerate_suite
from nodegames.graphs.graph import Graph


@pytest.fixture(scope="session")
def matrix_suite():
    return non_degenerate_suite()


@pytest.fixture(scope="session")
def degenerate_matrices():
    return degenerate_suite()


@pytest.fixture(scope="module")
def triangle():
    return Graph.from_edge_list(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture(scope="module")
def four_cycle():
    return Graph.from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture(scope="module")
def two_vertex_component_graph():
    return Graph.from_edge_list(3, [(0, 1)])
