# -*- coding: utf-8 -*-

import pytest
from nodegames.experiments.experiment_utils import initial_skew_check
from nodegames.tools.exceptions import ParameterError


def test_skew_bound_at_desk_scale():
    assert initial_skew_check(10 ** 6, 10 ** 4, seed=17, epsilon=0.5) >= 0.875


def test_zero_margin_always_holds():
    assert initial_skew_check(1000, 200, seed=1, epsilon=0.0) == 1.0


@pytest.mark.parametrize("epsilon, expected", [(0.5, 1.0), (20.0, 0.0)])
def test_single_vertex(epsilon, expected):
    assert initial_skew_check(1, 50, seed=3, epsilon=epsilon) == expected


def test_reproducible():
    assert initial_skew_check(999, 500, seed=4) == initial_skew_check(999, 500, seed=4)


@pytest.mark.parametrize("n, trials, epsilon", [(0, 10, 0.5), (10, 0, 0.5), (10, 10, -1.0)])
def test_bad_arguments(n, trials, epsilon):
    with pytest.raises(ParameterError):
        initial_skew_check(n, trials, seed=1, epsilon=epsilon)
