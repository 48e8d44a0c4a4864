"""Payoff matrices of 2x2 games and their classification.

A payoff matrix Q = (q_ij) is non-degenerate when q00 > q10 and q11 > q01
(the majority regime, coordination games) or q00 < q10 and q01 > q11 (the
minority regime, anti-coordination games). Otherwise one row weakly
dominates and the game is degenerate. Non-degenerate games are summarised
by the payoff skew lambda = (q11 - q01) / (q00 - q10) and the constants
derived from it.

"""
