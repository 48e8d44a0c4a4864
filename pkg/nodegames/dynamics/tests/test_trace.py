# -*- coding: utf-8 -*-

import numpy as np
import pytest
from nodegames.dynamics.dynamics_utils import run
from nodegames.dynamics.strategy_state import StrategyState
from nodegames.games.payoff_matrix import parse_matrix_literal


@pytest.fixture
def triangle_trace(triangle):
    return run(triangle, StrategyState([1, 1, 0]), parse_matrix_literal("1,0;0,1"))


def test_series(triangle_trace):
    assert triangle_trace.get_ones_series().tolist() == [2, 3, 3]
    assert triangle_trace.get_zeros_series().tolist() == [1, 0, 0]
    assert triangle_trace.get_eta_series().tolist() == [1, 3, 3]
    assert triangle_trace.get_mu_series().tolist() == [1, 0, 0]
    assert triangle_trace.get_minority_series().tolist() == [0, 0, 0]


def test_minority_ties_resolve_to_zero(four_cycle):
    trace = run(four_cycle, StrategyState([0, 1, 1, 1]), parse_matrix_literal("0,1;1,0"))
    minority = trace.get_minority_series()
    ones = trace.get_ones_series()
    assert np.array_equal(minority == 1, ones < 4 - ones)


def test_step_statistics(triangle_trace):
    table = triangle_trace.step_statistics()
    assert list(table.columns) == ["t", "ones", "zeros", "eta", "mu", "minority"]
    assert table["t"].tolist() == [0, 1, 2]


def test_to_dict(triangle_trace):
    document = triangle_trace.to_dict(include_states=True)
    assert document["n"] == 3
    assert document["steps"] == 2
    assert document["cycle"] == {"entry": 1, "period": 1}
    assert document["per_step"][0] == {"t": 0, "ones": 2, "zeros": 1, "eta": 1, "mu": 1, "minority": 0}
    assert document["states"] == {"0": "3:6", "1": "3:7", "2": "3:7"}
    assert "states" not in triangle_trace.to_dict()


def test_initial_state(triangle_trace):
    assert triangle_trace.get_initial() == StrategyState([1, 1, 0])
    assert triangle_trace.get_vertex_count() == 3
    assert triangle_trace.get_recorded_times() == [0, 1, 2]
