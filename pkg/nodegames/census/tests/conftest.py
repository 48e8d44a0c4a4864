# -*- coding: utf-8 -*-

import pytest
from nodegames.graphs.graph import Graph


@pytest.fixture(scope="module")
def path_graph():
    return Graph.from_edge_list(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture(scope="module")
def complete_graph_k4():
    return Graph.from_edge_list(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


@pytest.fixture(scope="module")
def star_k15():
    return Graph.from_edge_list(6, [(0, v) for v in range(1, 6)])


@pytest.fixture(scope="module")
def triangle():
    return Graph.from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
