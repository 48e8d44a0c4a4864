from nodegames.dynamics.dynamics_utils import detect_unanimity, run
from nodegames.dynamics.strategy_state import random_state
from nodegames.games.game_class import classify
from nodegames.games.payoff_matrix import hawk_dove_matrix
from nodegames.graphs.graph_utils import largest_component, sample_gnp
from nodegames.tools.seeding import trial_generators

n = 20000
d = 15.0

matrix = hawk_dove_matrix(2, 6)
game = classify(matrix)
graph_rng, state_rng = trial_generators(2024)
graph = sample_gnp(n, d / n, graph_rng)
trace = run(graph, random_state(n, state_rng), game)
verdict = detect_unanimity(trace, largest_component(graph))

print("{} on G({}, {}/n)".format(game.describe(), n, d))
print(trace.step_statistics().to_string(index=False))
print("largest component: {}, cycle {}".format(verdict.describe(), trace.get_cycle()))
