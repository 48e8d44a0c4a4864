"""Censuses of the structures that decide whether a random graph reaches
unanimity: blocking stars and their expected counts, the low degree
subgraph, delta-balanced vertices, the equal neighbourhoods condition
and gamma-good vertices

"""

import logging
import math
from itertools import combinations

import numpy as np
from scipy.optimize import brentq
from scipy.special import gammaln

from nodegames.census.blocking_star import BlockingStar, StarConfiguration
from nodegames.census.low_degree_report import LowDegreeReport
from nodegames.dynamics.dynamics_utils import step_direct, step_reduced
from nodegames.games.game_class import GameClass, classify, derived_constants
from nodegames.graphs.graph_utils import component_labels, degree_partition, induced_subgraph
from nodegames.tools.exceptions import ParameterError, UnsupportedError

logger = logging.getLogger(__name__)


def _check_star_shape(ell, k):
    if ell < 1:
        raise ParameterError("a blocking star needs at least one leaf, got ell={}".format(ell))
    if k < 0:
        raise ParameterError("the connector count cannot be negative, got k={}".format(k))


def _star_centres(g, ell, k):
    degrees = g.get_degrees()
    pendant = (degrees == 1).astype(np.uint8)
    pendant_counts = g.neighbour_counts(pendant)
    centres = np.flatnonzero((degrees == ell + k) & (pendant_counts >= ell))
    return centres, pendant_counts[centres]


def find_blocking_stars(g, ell, k):
    """Enumerates the (ell, k)-blocking stars of a graph

    A centre of degree ell + k with m >= ell neighbours of degree one
    yields C(m, ell) stars, one per choice of blocking leaves; the other
    neighbours of the centre are its connectors

    Parameters
    ----------
    g: Graph
        The graph
    ell: int
        The number of blocking leaves, at least 1
    k: int
        The number of connectors, at least 0

    Returns
    -------
    list
        BlockingStar objects ordered by centre and then by leaves

    """
    _check_star_shape(ell, k)
    degrees = g.get_degrees()
    centres, _ = _star_centres(g, ell, k)
    stars = []
    for centre in centres.tolist():
        neighbours = g.neighbours(centre).tolist()
        pendant = [v for v in neighbours if degrees[v] == 1]
        for leaves in combinations(pendant, ell):
            connectors = tuple(v for v in neighbours if v not in leaves)
            stars.append(BlockingStar(centre, leaves, connectors))
    logger.debug("found %d (%d,%d)-blocking stars", len(stars), ell, k)
    return stars


def count_blocking_stars(g, ell, k):
    """Counts the (ell, k)-blocking stars without listing them

    Parameters
    ----------
    g: Graph
        The graph
    ell: int
        The number of blocking leaves, at least 1
    k: int
        The number of connectors, at least 0

    Returns
    -------
    int
        len(find_blocking_stars(g, ell, k))

    """
    _check_star_shape(ell, k)
    _, pendant_counts = _star_centres(g, ell, k)
    return sum(math.comb(int(m), ell) for m in pendant_counts)


def _log_expected_count(n, d, ell, k):
    return (math.log(n) + (ell + k) * math.log(d)
            - gammaln(ell + 1) - gammaln(k + 1) - d * (ell + 1))


def expected_count(n, d, ell, k):
    """Evaluates the asymptotic expected number of (ell, k)-blocking stars
    in G(n, d/n), n d^(ell + k) / (ell! k!) e^(-d (ell + 1))

    Parameters
    ----------
    n: int
        The number of vertices
    d: float
        The expected degree, at least 0
    ell: int
        The number of blocking leaves
    k: int
        The number of connectors

    Returns
    -------
    float
        The expected count, evaluated in log space

    """
    _check_star_shape(ell, k)
    if d < 0:
        raise ParameterError("expected degree must be positive, got {}".format(d))
    if d == 0:
        return 0.0
    return float(np.exp(_log_expected_count(n, d, ell, k)))


def density_for_expected_count(n, target, ell, k):
    """Finds the expected degree at which expected_count equals a target

    The count rises up to d = (ell + k) / (ell + 1) and decreases after
    it, the root is taken on the decreasing side

    Parameters
    ----------
    n: int
        The number of vertices
    target: float
        The wanted expected number of stars, positive
    ell: int
        The number of blocking leaves
    k: int
        The number of connectors

    Returns
    -------
    float
        The expected degree d

    """
    _check_star_shape(ell, k)
    if target <= 0:
        raise ParameterError("target count must be positive, got {}".format(target))
    peak = (ell + k) / (ell + 1)
    goal = math.log(target)

    def excess(d):
        return _log_expected_count(n, d, ell, k) - goal

    if excess(peak) < 0:
        raise ParameterError("no density reaches {} expected stars on {} vertices".format(target, n))
    upper = max(2 * peak, 1.0)
    while excess(upper) > 0:
        upper *= 2
    return brentq(excess, peak, upper)


def poisson_limit(c, ell, k):
    """Evaluates the limit of expected_count along the threshold
    d = log(n) / (ell + 1) + (ell + k) / (ell + 1) log log n + c

    Substituting d leaves n d^(ell + k) e^(-d (ell + 1)) =
    (d / log n)^(ell + k) e^(-(ell + 1) c) and d / log n tends to
    1 / (ell + 1)

    Parameters
    ----------
    c: float
        The limit of the threshold offset
    ell: int
        The number of blocking leaves
    k: int
        The number of connectors

    Returns
    -------
    float
        e^(-(ell + 1) c) / ((ell + 1)^(ell + k) ell! k!), the mean of the
        limiting Poisson law of the star count

    """
    _check_star_shape(ell, k)
    return math.exp(-(ell + 1) * c - (ell + k) * math.log(ell + 1)
                    - gammaln(ell + 1) - gammaln(k + 1))


def _skewed_constants(lam):
    i_star, ell, ell_prime, _ = derived_constants(lam)
    if i_star is None:
        raise UnsupportedError("the threshold bounds only hold for a payoff skew other than 1")
    return ell, ell_prime


def majority_unanimity_bounds(c, lam):
    """Bounds the limit of u_n(1) in the majority regime at the threshold
    d = c_lambda log n + log log n + omega with omega tending to c

    With mu = poisson_limit(c, ell_lambda, 1) the number of
    (ell_lambda, 1)-blocking stars is asymptotically Poisson(mu); the
    bounds are Poisson generating functions evaluated at 2^-(ell + 1)
    and 1 - 2^-(ell + 1)

    Parameters
    ----------
    c: float
        The limit of omega
    lam: fractions.Fraction
        The payoff skew, not 1

    Returns
    -------
    float, float
        The lower and the upper bound

    """
    ell, _ = _skewed_constants(lam)
    mu = poisson_limit(c, ell, 1)
    blocked = 2.0 ** -(ell + 1)
    return math.exp(-mu * (1 - blocked)), math.exp(-mu * blocked)


def minority_unanimity_bounds(c, lam):
    """Bounds the limit of u_n(1) in the minority regime at the threshold
    d = log(n) / 2 + (1 + ell'_lambda) / 2 log log n + omega with omega
    tending to c

    Parameters
    ----------
    c: float
        The limit of omega
    lam: fractions.Fraction
        The payoff skew, not 1

    Returns
    -------
    float, float
        e^-mu and e^(-mu / 4) with mu = poisson_limit(c, 1, ell'_lambda)

    """
    _, ell_prime = _skewed_constants(lam)
    mu = poisson_limit(c, 1, ell_prime)
    return math.exp(-mu), math.exp(-mu / 4)


def star_configuration(star, s):
    """Reads the configuration of a blocking star in a state

    Parameters
    ----------
    star: BlockingStar
        The star
    s: StrategyState
        The strategies

    Returns
    -------
    StarConfiguration or None
        None when the blocking leaves disagree

    """
    bits = s.get_bits()
    leaves = bits[list(star.blocking_leaves)]
    if (leaves != leaves[0]).any():
        return None
    return StarConfiguration(int(leaves[0]), int(bits[star.center]))


def low_degree_structure_report(g, C, ell):
    """Describes the subgraph induced by L(C) = {v : d(v) < C}

    Parameters
    ----------
    g: Graph
        The graph
    C: int
        The degree threshold, at least 1
    ell: int
        The bound to check against, see LowDegreeReport.within_bounds

    Returns
    -------
    LowDegreeReport
        The largest common neighbourhood among low vertices, the largest
        connected low set and whether low sets induce trees

    """
    partition = degree_partition(g, C)
    low = partition.get_low()
    if low.size == 0:
        return LowDegreeReport(C, ell, 0, 0, 0, True)
    low_mask = partition.low_mask(g.get_vertex_count()).astype(np.uint8)
    covertex = int(g.neighbour_counts(low_mask).max(initial=0))
    subgraph, _ = induced_subgraph(g, low)
    labels = component_labels(subgraph)
    sizes = np.bincount(labels)
    edges = subgraph.edges()
    edge_counts = np.bincount(labels[edges[:, 0]], minlength=sizes.size)
    return LowDegreeReport(C, ell, int(low.size), covertex, int(sizes.max()),
                           bool((edge_counts == sizes - 1).all()))


def balanced_census(g, s, delta, d):
    """Finds the delta-unbalanced vertices

    A vertex is delta-balanced when both n(v;0) and n(v;1) lie within a
    factor 1 +- delta of their mean (n - 1) d / (2 n) under G(n, d/n)

    Parameters
    ----------
    g: Graph
        The graph
    s: StrategyState
        The strategies
    delta: float
        The tolerance, in (0, 1)
    d: float
        The expected degree of the model, positive

    Returns
    -------
    numpy.ndarray
        The sorted unbalanced vertices

    """
    if not 0 < delta < 1:
        raise ParameterError("delta must lie in (0, 1), got {}".format(delta))
    if d <= 0:
        raise ParameterError("expected degree must be positive, got {}".format(d))
    n = g.get_vertex_count()
    mean = (n - 1) * d / (2 * n)
    ones = g.neighbour_counts(s.get_bits())
    zeros = g.get_degrees() - ones
    tolerance = delta * mean
    unbalanced = (np.abs(zeros - mean) > tolerance) | (np.abs(ones - mean) > tolerance)
    return np.flatnonzero(unbalanced)


def enc_census(g, s):
    """Finds the vertices satisfying the equal neighbourhoods condition

    Parameters
    ----------
    g: Graph
        The graph
    s: StrategyState
        The strategies

    Returns
    -------
    numpy.ndarray, numpy.ndarray
        ENC = {v : n(v;0) = n(v;1)} as sorted vertices, and for every
        vertex EQ(v) = |N(v) n ENC|

    """
    ones = g.neighbour_counts(s.get_bits())
    equal = 2 * ones == g.get_degrees()
    return np.flatnonzero(equal), g.neighbour_counts(equal.astype(np.uint8))


def good_census(g, s, gamma, d):
    """Finds the gamma-good vertices of a minority game started from s

    The coupled majority game runs one step from the complement of s. A
    vertex is good when EQ(v) < gamma sqrt(d) and at least
    d(v) / 2 + 2 gamma sqrt(d) of its neighbours play 1 in that
    majority game at time 1. Good vertices play 0 at time 2 of the
    minority game

    Parameters
    ----------
    g: Graph
        The graph
    s: StrategyState
        The initial strategies of the minority game
    gamma: float
        The margin, positive
    d: float
        The expected degree, positive

    Returns
    -------
    numpy.ndarray
        The sorted good vertices

    """
    if gamma <= 0:
        raise ParameterError("gamma must be positive, got {}".format(gamma))
    if d <= 0:
        raise ParameterError("expected degree must be positive, got {}".format(d))
    margin = gamma * math.sqrt(d)
    _, eq = enc_census(g, s)
    majority = step_reduced(g, s.complement(), GameClass.majority(1))
    ones = g.neighbour_counts(majority.get_bits())
    good = (eq < margin) & (ones >= g.get_degrees() / 2 + 2 * margin)
    return np.flatnonzero(good)


def minority_decline(g, s, q, C):
    """Counts how many high degree vertices play the minority strategy
    before and after one step

    Parameters
    ----------
    g: Graph
        The graph
    s: StrategyState
        The strategies S_0
    q: PayoffMatrix
        A non-degenerate payoff matrix
    C: int
        The degree threshold of H(C) = {v : d(v) >= C}

    Returns
    -------
    int, int
        |m_0 n H(C)| and |m_1 n H(C)|, where m is the strategy played by
        fewer vertices at time 0 (0 on a tie)

    """
    if classify(q).is_degenerate():
        raise ParameterError("the minority decline is only defined for non-degenerate games")
    high = degree_partition(g, C).get_high()
    ones = s.count_ones()
    minority = 1 if ones < s.get_length() - ones else 0
    before = int(np.count_nonzero(s.get_bits()[high] == minority))
    after = int(np.count_nonzero(step_direct(g, s, q).get_bits()[high] == minority))
    return before, after
