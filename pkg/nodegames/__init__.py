"""The nodegames package simulates interacting node systems: every vertex
of a graph plays a 2x2 game against each of its neighbours and all
vertices update to their best response at the same time. The package
classifies the games, runs the synchronous dynamics on binomial random
graphs, counts the local structures that block unanimity and estimates
the probability of unanimity with seeded Monte Carlo ensembles

"""
from nodegames.games.payoff_matrix import PayoffMatrix
from nodegames.games.game_class import GameClass
from nodegames.graphs.graph import Graph
from nodegames.dynamics.strategy_state import StrategyState
from nodegames.dynamics.trace import Trace
from nodegames.census.blocking_star import BlockingStar
from nodegames.experiments.experiment_config import ExperimentConfig
from nodegames.experiments.ensemble_result import EnsembleResult
