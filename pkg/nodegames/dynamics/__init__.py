"""The synchronous evolution of an interacting node system.

At every step each vertex compares the total payoff of its current
strategy against its neighbours with the payoff it would have received
by playing the other strategy, and switches exactly when the
alternative is strictly better. All vertices update simultaneously.

For non-degenerate games the same evolution can be written as a
threshold rule on the neighbour counts n(v; 0), n(v; 1) and the payoff
skew lambda. Both forms are implemented and are interchangeable.

"""
