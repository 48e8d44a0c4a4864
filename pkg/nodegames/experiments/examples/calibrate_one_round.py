import math

from nodegames.experiments.experiment_utils import calibrate_one_round_factor, one_round_holdout_estimate
from nodegames.games.game_class import GameClass

n = 10 ** 5
game = GameClass.majority(2)

for factor in (2, 4, 6, 8, 12, 16, 20, 24):
    estimate = one_round_holdout_estimate(n, factor * math.log(n), game)
    print("d = {:>2} log n: {:.4g} expected vertices off i* after one round".format(factor, estimate))

factor = calibrate_one_round_factor(n, game, tolerance=0.1)
print("calibrated d = {:.3f} log n = {:.1f}".format(factor, factor * math.log(n)))
