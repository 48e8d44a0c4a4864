# -*- coding: utf-8 -*-

import math
import pytest
from nodegames.experiments.experiment_config import DensitySpec, ExperimentConfig
from nodegames.experiments.experiment_utils import calibrate_one_round_factor, run_ensemble
from nodegames.games.game_class import GameClass

N = 20000


@pytest.fixture(scope="module")
def dense_density():
    return DensitySpec.edge_probability(4 / math.sqrt(N))


@pytest.mark.slow
def test_majority_dynamics_reach_the_initial_majority(dense_density):
    config = ExperimentConfig(N, dense_density, "1,0;0,1", trials=50, base_seed=101)
    records = run_ensemble(config).get_records()
    fast = [record for record in records if record.is_unanimous() and record.rounds_to_unanimity <= 4]
    assert len(fast) >= 45
    winners = [record for record in records if record.is_unanimous()]
    assert sum(record.strategy == record.initial_majority for record in winners) >= 0.9 * len(winners)


@pytest.mark.slow
def test_minority_dynamics_alternate_in_unison(dense_density):
    config = ExperimentConfig(N, dense_density, "0,1;1,0", trials=50, base_seed=202)
    records = run_ensemble(config).get_records()
    fast = [record for record in records if record.is_unanimous() and record.rounds_to_unanimity <= 4]
    assert len(fast) >= 45
    assert all(record.mode == "alternating" for record in records if record.is_unanimous())


@pytest.mark.slow
def test_one_round_unanimity_at_the_calibrated_density():
    n = 10 ** 5
    factor = calibrate_one_round_factor(n, GameClass.majority(2), tolerance=0.1)
    config = ExperimentConfig(n, DensitySpec.expected_degree(factor * math.log(n)), "1,0;0,2",
                              trials=30, base_seed=303)
    records = run_ensemble(config).get_records()
    one_round = [record for record in records
                 if record.is_unanimous() and record.rounds_to_unanimity <= 1 and record.strategy == 1]
    assert len(one_round) >= 27
