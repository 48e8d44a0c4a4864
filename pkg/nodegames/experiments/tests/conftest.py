# -*- coding: utf-8 -*-

import pytest
from nodegames.experiments.experiment_config import DensitySpec, ExperimentConfig


@pytest.fixture
def small_config():
    return ExperimentConfig(300, DensitySpec.expected_degree(4.0), "1,0;0,1", trials=5, base_seed=11)


@pytest.fixture
def complete_graph_config():
    return ExperimentConfig(100, DensitySpec.edge_probability(1.0), "1,0;0,1", trials=10, base_seed=3)
