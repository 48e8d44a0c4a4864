"""The evolution rule of an interacting node system: payoffs, the direct
and the reduced synchronous step, running to a cycle and reading off
unanimity and stability from a trace

"""

import logging
import math
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import partial
from typing import Optional

import numpy as np

from nodegames.dynamics.strategy_state import StrategyState
from nodegames.dynamics.trace import Trace
from nodegames.games.game_class import GameClass, GameKind
from nodegames.games.payoff_matrix import PayoffMatrix
from nodegames.tools.exceptions import ParameterError

logger = logging.getLogger(__name__)

INT64_SAFE = 1 << 62
DEFAULT_WINDOW = 10 ** 4


def _scaled(counts, factor, bound):
    # int64 is exact while |factor| * max count stays below 2**62
    if abs(factor) * bound < INT64_SAFE:
        return counts * factor
    return counts.astype(object) * factor


def _neighbour_strategy_counts(g, s):
    if g.get_vertex_count() != s.get_length():
        raise ParameterError("state covers {} vertices but the graph has {}"
                             .format(s.get_length(), g.get_vertex_count()))
    ones = g.neighbour_counts(s.get_bits())
    return g.get_degrees() - ones, ones


def _payoff(g, s, q, v, row):
    neighbours = g.neighbours(v)
    ones = int(np.count_nonzero(s.get_bits()[neighbours]))
    zeros = neighbours.size - ones
    return zeros * q.entry(row, 0) + ones * q.entry(row, 1)


def total_payoff(g, s, q, v):
    """Computes the total payoff T(v) = n(v;0) q_{i,0} + n(v;1) q_{i,1}

    Parameters
    ----------
    g: Graph
        The interaction graph
    s: StrategyState
        The current strategies
    q: PayoffMatrix
        The payoff matrix
    v: int
        The vertex, playing i = S(v)

    Returns
    -------
    fractions.Fraction
        The exact total payoff

    """
    return _payoff(g, s, q, v, s.strategy(v))


def alternative_payoff(g, s, q, v):
    """Computes the alternative payoff T'(v), the total payoff v would have
    received playing 1 - S(v) against the same neighbours"""
    return _payoff(g, s, q, v, 1 - s.strategy(v))


def step_direct(g, s, q):
    """Runs one synchronous step of the payoff comparison rule

    A vertex switches exactly when its alternative payoff is strictly
    greater than its total payoff; ties keep the current strategy

    Parameters
    ----------
    g: Graph
        The interaction graph
    s: StrategyState
        The strategies S_t
    q: PayoffMatrix
        The payoff matrix

    Returns
    -------
    StrategyState
        The strategies S_{t+1}

    """
    zeros, ones = _neighbour_strategy_counts(g, s)
    (a00, a01), (a10, a11) = q.get_integer_entries()
    bound = int(g.get_degrees().max(initial=0))
    # gain of playing 1 over playing 0
    gain = _scaled(zeros, a10 - a00, bound) + _scaled(ones, a11 - a01, bound)
    bits = s.get_bits()
    switch = np.where(bits == 1, gain < 0, gain > 0).astype(bool)
    return StrategyState(np.where(switch, 1 - bits, bits))


def step_reduced(g, s, cls):
    """Runs one synchronous step of the threshold form of the rule

    With lambda = a / b and a vertex playing i, the majority regime
    switches when n(v;i) < lambda^(1 - 2i) n(v;1 - i) and the minority
    regime switches when n(v;i) > lambda^(1 - 2i) n(v;1 - i). Both sides
    are cross multiplied so the comparison is exact

    Parameters
    ----------
    g: Graph
        The interaction graph
    s: StrategyState
        The strategies S_t
    cls: GameClass
        A non-degenerate classification

    Returns
    -------
    StrategyState
        The strategies S_{t+1}

    """
    if cls.is_degenerate():
        raise ParameterError("degenerate games only evolve with step_direct")
    zeros, ones = _neighbour_strategy_counts(g, s)
    lam = cls.get_lambda()
    a, b = lam.numerator, lam.denominator
    bits = s.get_bits()
    playing_one = bits == 1
    own = np.where(playing_one, ones, zeros)
    other = np.where(playing_one, zeros, ones)
    bound = int(g.get_degrees().max(initial=0))
    # i = 0 compares b n(v;0) with a n(v;1), i = 1 compares a n(v;1) with b n(v;0)
    own_side = np.where(playing_one, _scaled(own, a, bound), _scaled(own, b, bound))
    other_side = np.where(playing_one, _scaled(other, b, bound), _scaled(other, a, bound))
    if cls.get_kind() is GameKind.MAJORITY:
        switch = own_side < other_side
    else:
        switch = own_side > other_side
    return StrategyState(np.where(switch.astype(bool), 1 - bits, bits))


def make_rule(game):
    """Wraps a game into a step function usable by run

    Parameters
    ----------
    game: PayoffMatrix or GameClass
        A payoff matrix selects the direct rule, a classification
        selects the reduced rule

    Returns
    -------
    function
        A function taking (graph, state) and returning the next state

    """
    if isinstance(game, PayoffMatrix):
        return partial(_direct_rule, q=game)
    if isinstance(game, GameClass):
        if game.is_degenerate():
            raise ParameterError("degenerate games only evolve with step_direct")
        return partial(_reduced_rule, cls=game)
    if callable(game):
        return game
    raise ParameterError("cannot build an evolution rule from {!r}".format(game))


def _direct_rule(g, s, q):
    return step_direct(g, s, q)


def _reduced_rule(g, s, cls):
    return step_reduced(g, s, cls)


def default_max_steps(n):
    """The default step budget 4 * ceil(log2(n) + 1)"""
    return 4 * math.ceil(math.log2(max(n, 1)) + 1)


def run(g, s0, rule, max_steps=None, record="all", window=DEFAULT_WINDOW):
    """Iterates the dynamics until a state repeats or the budget runs out

    Parameters
    ----------
    g: Graph
        The interaction graph
    s0: StrategyState
        The initial strategies
    rule: PayoffMatrix, GameClass or function
        The evolution rule, see make_rule
    max_steps: int
        The largest number of steps to take, at least 1. Defaults to
        default_max_steps(n)
    record: str
        "all" keeps every state, "stats_only" keeps only the last
        ``window`` states; per step counts are always kept
    window: int
        The number of states remembered in "stats_only" mode. Cycles
        longer than the window are not detected in that mode

    Returns
    -------
    Trace
        The record of the run. The cycle is absent when no state
        repeated within max_steps

    """
    if max_steps is None:
        max_steps = default_max_steps(g.get_vertex_count())
    if max_steps < 1:
        raise ParameterError("max_steps must be at least 1, got {}".format(max_steps))
    if record not in ("all", "stats_only"):
        raise ParameterError("record must be 'all' or 'stats_only', got {!r}".format(record))
    step = make_rule(rule)
    limit = None if record == "all" else max(window, 1)
    seen = {s0.key(): 0}
    kept = deque([(0, s0)], maxlen=limit)
    ones = [s0.count_ones()]
    cycle = None
    state = s0
    for t in range(1, max_steps + 1):
        state = step(g, state)
        ones.append(state.count_ones())
        kept.append((t, state))
        key = state.key()
        if key in seen:
            cycle = (seen[key], t - seen[key])
            break
        seen[key] = t
        if limit is not None and len(seen) > limit:
            del seen[next(iter(seen))]
    logger.debug("run stopped after %d steps, cycle %s", len(ones) - 1, cycle)
    return Trace(s0, dict(kept), ones, cycle)


class UnanimityStatus(Enum):
    """Outcome of a unanimity check"""
    UNANIMOUS = "unanimous"
    NOT_UNANIMOUS = "not_unanimous"
    INCONCLUSIVE = "inconclusive"


class UnanimityMode(Enum):
    """How a unanimous vertex set behaves inside the cycle"""
    FIXED = "fixed"
    ALTERNATING = "alternating"
    PERIODIC = "periodic"


@dataclass(frozen=True)
class UnanimityVerdict:
    """The result of detect_unanimity

    ``strategy`` is the shared strategy for the fixed mode and the
    shared strategy at even time steps for the alternating mode.
    ``pattern`` lists the shared strategy at each step of the cycle,
    starting at the cycle entry

    """
    status: UnanimityStatus
    from_time: Optional[int] = None
    mode: Optional[UnanimityMode] = None
    strategy: Optional[int] = None
    pattern: tuple = ()

    def is_unanimous(self):
        """Whether the verdict is UNANIMOUS"""
        return self.status is UnanimityStatus.UNANIMOUS

    def describe(self):
        """Formats the verdict for logs and the simulate output

        Returns
        -------
        str
            For example "unanimous fixed(1) from t=3" or "not unanimous"

        """
        if self.status is not UnanimityStatus.UNANIMOUS:
            return self.status.value.replace("_", " ")
        if self.mode is UnanimityMode.PERIODIC:
            return "unanimous periodic from t={}".format(self.from_time)
        return "unanimous {}({}) from t={}".format(self.mode.value, self.strategy, self.from_time)


def _shared_strategy(state, vertices):
    bits = state.get_bits() if vertices is None else state.get_bits()[vertices]
    if bits.size == 0:
        return None
    first = int(bits[0])
    return first if (bits == first).all() else None


def _shared_strategy_from_counts(trace, t):
    ones = int(trace.get_ones_series()[t])
    if ones == trace.get_vertex_count():
        return 1
    if ones == 0:
        return 0
    return None


def detect_unanimity(trace, vertex_set=None):
    """Decides whether a vertex set is eventually unanimous

    Parameters
    ----------
    trace: Trace
        A trace produced by run
    vertex_set: array_like or None
        The vertices to inspect, all vertices when None

    Returns
    -------
    UnanimityVerdict
        Inconclusive when the trace has no cycle. Otherwise unanimous
        iff the set shares one strategy at every step of the cycle, with
        from_time the first T after which it stays unanimous. In record
        mode "stats_only" states older than the window are unknown and
        from_time is the earliest step that can be confirmed

    """
    if not trace.has_cycle():
        return UnanimityVerdict(UnanimityStatus.INCONCLUSIVE)
    vertices = None if vertex_set is None else np.asarray(sorted(vertex_set), dtype=np.int64)
    if vertices is not None and vertices.size == 0:
        raise ParameterError("cannot check unanimity of an empty vertex set")
    entry, period = trace.get_cycle()
    pattern = tuple(_shared_strategy(trace.state_at(entry + j), vertices) for j in range(period))
    if any(value is None for value in pattern):
        return UnanimityVerdict(UnanimityStatus.NOT_UNANIMOUS)
    if all(value == pattern[0] for value in pattern):
        mode, strategy = UnanimityMode.FIXED, pattern[0]
    elif period % 2 == 0 and all(value == pattern[0] ^ (j % 2) for j, value in enumerate(pattern)):
        mode, strategy = UnanimityMode.ALTERNATING, pattern[0] ^ (entry % 2)
    else:
        mode, strategy = UnanimityMode.PERIODIC, None
    from_time = entry
    while from_time > 0:
        state = trace.state_at(from_time - 1)
        if state is not None:
            shared = _shared_strategy(state, vertices)
        elif vertices is None:
            shared = _shared_strategy_from_counts(trace, from_time - 1)
        else:
            break
        if shared is None:
            break
        from_time -= 1
    return UnanimityVerdict(UnanimityStatus.UNANIMOUS, from_time, mode, strategy, pattern)


@dataclass(frozen=True)
class StabilityReport:
    """The result of stability_report. ``stable_from`` is the cycle entry
    when the period is 1 and None otherwise; ``conclusive`` is False
    when the trace has no cycle"""
    conclusive: bool
    stable_from: Optional[int] = None

    def is_stable(self):
        """Whether the run reached a fixed point"""
        return self.stable_from is not None


def stability_report(trace):
    """Decides whether the run froze into a fixed point

    Parameters
    ----------
    trace: Trace
        A trace produced by run

    Returns
    -------
    StabilityReport
        stable_from is the cycle entry time iff the period is 1

    """
    if not trace.has_cycle():
        return StabilityReport(False)
    entry, period = trace.get_cycle()
    return StabilityReport(True, entry if period == 1 else None)
