"""Monte Carlo experiments on G(n, p): ensembles of seeded trials,
threshold sweeps, blocking star statistics, the initial strategy skew,
the long run majority gap and the calibration of the one round density

"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor, as_completed

import numpy as np
import pandas as pd
from scipy.optimize import brentq
from scipy.stats import poisson
from tqdm import tqdm

from nodegames.census.census_utils import count_blocking_stars, expected_count, find_blocking_stars, \
    star_configuration
from nodegames.dynamics.dynamics_utils import detect_unanimity, run
from nodegames.dynamics.strategy_state import initial_majority, random_state
from nodegames.experiments.ensemble_result import EnsembleResult, TrialRecord
from nodegames.experiments.experiment_config import DensitySpec
from nodegames.games.game_class import GameClass, GameKind
from nodegames.graphs.graph_utils import component_labels, largest_component, sample_gnp
from nodegames.tools.exceptions import ParameterError, UnsupportedError
from nodegames.tools.seeding import make_generator, trial_generators, trial_seed

logger = logging.getLogger(__name__)

HISTOGRAM_COLUMNS = ["leaf_strategy", "center_strategy", "count", "frequency", "expected_frequency",
                     "stderr", "expected_count"]


def blocking_star_shape(game_class):
    """The (ell, k) of the blocking stars that obstruct unanimity

    Parameters
    ----------
    game_class: GameClass
        The game

    Returns
    -------
    tuple or None
        (ell_lambda, 1) in the majority regime, (1, ell'_lambda) in the
        minority regime and None for degenerate games

    """
    if game_class.is_degenerate():
        return None
    if game_class.get_kind() is GameKind.MAJORITY:
        return game_class.get_ell_lambda(), 1
    return 1, game_class.get_ell_lambda_prime()


def _evolution_rule(config):
    game_class = config.get_game_class()
    return config.get_matrix() if game_class.is_degenerate() else game_class


def run_trial(config, trial):
    """Runs one trial of an ensemble

    The trial samples G(n, p) and S_1/2 from two independent streams of
    its trial seed, runs the dynamics until a state repeats or the step
    budget is spent and checks unanimity of the target vertex set

    Parameters
    ----------
    config: ExperimentConfig
        The ensemble configuration
    trial: int
        The 0-based trial index

    Returns
    -------
    TrialRecord
        The outcome of the trial

    """
    seed = trial_seed(config.get_base_seed(), trial)
    graph_rng, state_rng = trial_generators(seed)
    n = config.get_n()
    _, p = config.resolve_density()
    g = sample_gnp(n, p, graph_rng)
    s0 = random_state(n, state_rng)
    trace = run(g, s0, _evolution_rule(config), max_steps=config.get_max_steps(), record="stats_only")
    target = largest_component(g) if config.get_target() == "largest_component" else None
    verdict = detect_unanimity(trace, target)
    star_count = None
    shape = blocking_star_shape(config.get_game_class())
    if config.counts_stars() and shape is not None:
        star_count = count_blocking_stars(g, *shape)
    mode = verdict.mode.value if verdict.is_unanimous() else verdict.status.value
    logger.debug("trial %d (seed %d): %s", trial, seed, verdict.describe())
    return TrialRecord(trial, seed, verdict.from_time, mode, trace.get_period(),
                       tuple(int(eta) for eta in trace.get_eta_series()), initial_majority(s0),
                       verdict.strategy, star_count, n if target is None else int(target.size))


def run_ensemble(config, progress=False):
    """Runs every trial of an ensemble

    Parameters
    ----------
    config: ExperimentConfig
        The ensemble configuration. With more than one worker the trials
        run in a process pool
    progress: bool
        Whether to show a progress bar on stderr

    Returns
    -------
    EnsembleResult
        The records sorted by trial index, identical for any number of
        workers

    """
    trials = range(config.get_trials())
    workers = config.get_workers()
    logger.info("running %d trials on n=%d with %d worker(s)", len(trials), config.get_n(), workers)
    records = []
    with tqdm(total=len(trials), desc="trials", disable=not progress) as bar:
        if workers == 1:
            for trial in trials:
                records.append(run_trial(config, trial))
                bar.update()
        else:
            with ProcessPoolExecutor(max_workers=workers) as executor:
                futures = [executor.submit(run_trial, config, trial) for trial in trials]
                for future in as_completed(futures):
                    records.append(future.result())
                    bar.update()
    result = EnsembleResult(config.to_dict(), records)
    logger.info("%d of %d conclusive trials unanimous", result.get_unanimous_count(),
                result.get_conclusive_count())
    return result


def threshold_density(n, game_class, omega):
    """Resolves the unanimity threshold of a game on n vertices

    Parameters
    ----------
    n: int
        The number of vertices, at least 3
    game_class: GameClass
        A non-degenerate game with payoff skew other than 1
    omega: float
        The correction term

    Returns
    -------
    float
        d = c_lambda log n + log log n + omega in the majority regime and
        d = log(n) / 2 + (1 + ell'_lambda) / 2 log log n + omega in the
        minority regime

    """
    d, _ = DensitySpec.for_game(game_class, omega).resolve(n, game_class)
    return d


def threshold_sweep(base_config, omega_grid=None, progress=False):
    """Estimates u_n(1) along the unanimity threshold

    Parameters
    ----------
    base_config: ExperimentConfig
        The ensemble to repeat at every grid point; its density is
        replaced by the threshold density of its game
    omega_grid: list or None
        The omega values, the grid of base_config when None
    progress: bool
        Whether to show progress bars

    Returns
    -------
    pandas.DataFrame
        One row per omega with columns omega, d, p, u_hat, stderr,
        conclusive and unanimous

    """
    game_class = base_config.get_game_class()
    if game_class.is_degenerate() or game_class.get_i_star() is None:
        raise UnsupportedError("threshold sweeps need a non-degenerate game with payoff skew "
                               "other than 1, got {}".format(game_class.describe()))
    grid = base_config.get_omega_grid() if omega_grid is None else tuple(omega_grid)
    if not grid:
        raise ParameterError("the omega grid is empty")
    rows = []
    for omega in grid:
        config = base_config.replace(density=DensitySpec.for_game(game_class, omega))
        d, p = config.resolve_density()
        logger.info("sweep point omega=%g: d=%.4f, p=%.6g", omega, d, p)
        result = run_ensemble(config, progress=progress)
        rows.append({"omega": float(omega), "d": d, "p": p, "u_hat": result.u_hat(),
                     "stderr": result.u_hat_stderr(), "conclusive": result.get_conclusive_count(),
                     "unanimous": result.get_unanimous_count()})
    return pd.DataFrame(rows, columns=["omega", "d", "p", "u_hat", "stderr", "conclusive", "unanimous"])


def _sample_graph(n, d, seed, sample):
    graph_rng, state_rng = trial_generators(trial_seed(seed, sample))
    p = d / n
    if not 0.0 <= p <= 1.0:
        raise ParameterError("expected degree {} gives edge probability {} outside [0, 1]".format(d, p))
    return sample_gnp(n, p, graph_rng), state_rng


def star_counts(n, d, ell, k, samples, seed):
    """Counts the (ell, k)-blocking stars of independent samples of
    G(n, d/n)

    Returns
    -------
    numpy.ndarray
        One count per sample

    """
    if samples < 1:
        raise ParameterError("samples must be at least 1, got {}".format(samples))
    return np.array([count_blocking_stars(_sample_graph(n, d, seed, sample)[0], ell, k)
                     for sample in range(samples)], dtype=np.int64)


def star_statistics(n, d, ell, k, samples, seed):
    """Compares the blocking star count of G(n, d/n) with its expectation

    Parameters
    ----------
    n: int
        The number of vertices
    d: float
        The expected degree
    ell: int
        The number of blocking leaves
    k: int
        The number of connectors
    samples: int
        The number of sampled graphs, at least 1
    seed: int
        The base seed of the samples

    Returns
    -------
    float, float, float
        The empirical mean and variance of the count (variance 0 for a
        single sample) and expected_count(n, d, ell, k)

    """
    counts = star_counts(n, d, ell, k, samples, seed)
    variance = float(counts.var(ddof=1)) if counts.size > 1 else 0.0
    reference = expected_count(n, d, ell, k)
    logger.info("(%d,%d)-stars at n=%d, d=%.4f: mean %.3f, variance %.3f, expected %.3f",
                ell, k, n, d, counts.mean(), variance, reference)
    return float(counts.mean()), variance, reference


def _disjoint_pairs(stars, configurations):
    pairs = []
    pending = None
    for star, configuration in zip(stars, configurations):
        if configuration is None:
            continue
        core = {star.center, *star.blocking_leaves}
        if pending is None:
            pending = (core, configuration)
        elif pending[0].isdisjoint(core):
            pairs.append((pending[1], configuration))
            pending = None
        else:
            pending = (core, configuration)
    return pairs


def configuration_statistics(n, d, ell, k, samples, seed):
    """Tabulates the initial configurations of the blocking stars in L_1

    Each sample draws G(n, d/n) and a fresh S_1/2 from two streams of
    its sample seed. Stars whose centre lies outside the largest
    component are skipped

    Parameters
    ----------
    n: int
        The number of vertices
    d: float
        The expected degree
    ell: int
        The number of blocking leaves
    k: int
        The number of connectors
    samples: int
        The number of samples, at least 1
    seed: int
        The base seed

    Returns
    -------
    pandas.DataFrame, float
        The histogram with one row per (i, j)-configuration, holding the
        pooled count, its frequency among all stars found, the expected
        frequency 2^-(ell + 1), the standard error of that frequency and
        the expected pooled count; empty when no star was found. Then
        the correlation of the configurations of stars with disjoint
        centres and leaves, nan when fewer than three pairs were seen

    """
    if samples < 1:
        raise ParameterError("samples must be at least 1, got {}".format(samples))
    counts = {(i, j): 0 for i in (0, 1) for j in (0, 1)}
    total = 0
    pairs = []
    for sample in range(samples):
        g, state_rng = _sample_graph(n, d, seed, sample)
        s = random_state(n, state_rng)
        labels = component_labels(g)
        stars = [star for star in find_blocking_stars(g, ell, k) if labels[star.center] == 0]
        configurations = [star_configuration(star, s) for star in stars]
        total += len(stars)
        for configuration in configurations:
            if configuration is not None:
                counts[configuration.as_tuple()] += 1
        pairs.extend(_disjoint_pairs(stars, configurations))
    if total == 0:
        return pd.DataFrame(columns=HISTOGRAM_COLUMNS), math.nan
    expected_frequency = 2.0 ** -(ell + 1)
    stderr = math.sqrt(expected_frequency * (1 - expected_frequency) / total)
    pooled_expectation = samples * expected_count(n, d, ell, k) * expected_frequency
    histogram = pd.DataFrame([{"leaf_strategy": i, "center_strategy": j, "count": count,
                               "frequency": count / total, "expected_frequency": expected_frequency,
                               "stderr": stderr, "expected_count": pooled_expectation}
                              for (i, j), count in sorted(counts.items())], columns=HISTOGRAM_COLUMNS)
    return histogram, _configuration_correlation(pairs)


def _configuration_correlation(pairs):
    if len(pairs) < 3:
        return math.nan
    codes = np.array([[2 * a.leaf_strategy + a.center_strategy, 2 * b.leaf_strategy + b.center_strategy]
                      for a, b in pairs], dtype=np.float64)
    if (codes.std(axis=0) == 0).any():
        return math.nan
    return float(np.corrcoef(codes[:, 0], codes[:, 1])[0, 1])


def initial_skew_check(n, trials, seed, epsilon=0.5):
    """Estimates P[eta_0 >= 2 c sqrt(n)] under S_1/2 with
    c = sqrt(2 pi) epsilon / 20

    The number of vertices playing 1 under S_1/2 is Bin(n, 1/2), so each
    draw samples that count directly

    Parameters
    ----------
    n: int
        The number of vertices, at least 1
    trials: int
        The number of draws, at least 1
    seed: int
        The seed of the draws
    epsilon: float
        The error level, at least 0

    Returns
    -------
    float
        The fraction of draws with | |P_0| - |N_0| | >= 2 c sqrt(n)

    """
    if trials < 1:
        raise ParameterError("trials must be at least 1, got {}".format(trials))
    if n < 1:
        raise ParameterError("n must be at least 1, got {}".format(n))
    if epsilon < 0:
        raise ParameterError("epsilon cannot be negative, got {}".format(epsilon))
    c = math.sqrt(2 * math.pi) * epsilon / 20
    ones = make_generator(seed).binomial(n, 0.5, size=trials)
    eta = np.abs(2 * ones - n)
    return float(np.mean(eta >= 2 * c * math.sqrt(n)))


def _even_phase_time(trace):
    if trace.has_cycle():
        entry = trace.get_entry_time()
        return entry + entry % 2
    steps = trace.get_steps()
    return steps - steps % 2


def long_run_gap(n, d, trials, horizon, seed):
    """Records the majority gap of majority dynamics (lambda = 1) once
    the run has settled, at an even step

    Parameters
    ----------
    n: int
        The number of vertices
    d: float
        The expected degree
    trials: int
        The number of trials, at least 1
    horizon: int
        The step budget of each run, at least 1
    seed: int
        The base seed

    Returns
    -------
    pandas.DataFrame
        One row per trial with columns trial, seed, eta_0, eta_even,
        eta_ratio = eta_even / n, entry and period. eta_even is read at
        the first even step inside the cycle, or at the last even step
        when no cycle was found

    """
    if trials < 1:
        raise ParameterError("trials must be at least 1, got {}".format(trials))
    rule = GameClass.majority(1)
    rows = []
    for trial in range(trials):
        g, state_rng = _sample_graph(n, d, seed, trial)
        trace = run(g, random_state(n, state_rng), rule, max_steps=horizon, record="stats_only")
        eta = trace.get_eta_series()
        eta_even = int(eta[_even_phase_time(trace)])
        rows.append({"trial": trial, "seed": trial_seed(seed, trial), "eta_0": int(eta[0]),
                     "eta_even": eta_even, "eta_ratio": eta_even / n,
                     "entry": trace.get_entry_time(), "period": trace.get_period()})
    frame = pd.DataFrame(rows, columns=["trial", "seed", "eta_0", "eta_even", "eta_ratio", "entry", "period"])
    return frame.astype({"entry": "Int64", "period": "Int64"})


def _spread(game_class):
    if game_class.get_kind() is not GameKind.MAJORITY or game_class.get_i_star() is None:
        raise UnsupportedError("one round unanimity is a majority regime statement for payoff skew "
                               "other than 1, got {}".format(game_class.describe()))
    lam = game_class.get_lambda()
    return max(lam, 1 / lam)


def one_round_holdout_estimate(n, d, game_class):
    """Estimates how many vertices play 1 - i* after one round from S_1/2

    The neighbour counts n(v; i*) and n(v; 1 - i*) are approximated by
    independent Poisson(d / 2) variables Y and X. A vertex starting on
    1 - i* keeps it when X >= m Y and a vertex starting on i* leaves it
    when X > m Y, with m = max(lambda, 1 / lambda)

    Parameters
    ----------
    n: int
        The number of vertices
    d: float
        The expected degree, positive
    game_class: GameClass
        A majority regime game with payoff skew other than 1

    Returns
    -------
    float
        The expected number of vertices that block unanimity at time 1

    """
    spread = _spread(game_class)
    if d <= 0:
        raise ParameterError("expected degree must be positive, got {}".format(d))
    mean = d / 2
    favoured = np.arange(int(poisson.ppf(1 - 1e-15, mean)) + 2, dtype=np.int64)
    scaled = favoured * spread.numerator
    at_least = -(-scaled // spread.denominator)
    strictly_above = scaled // spread.denominator + 1
    keep = poisson.sf(at_least - 1, mean)
    leave = poisson.sf(strictly_above - 1, mean)
    return float(n * np.sum(poisson.pmf(favoured, mean) * (keep + leave)) / 2)


def calibrate_one_round_factor(n, game_class, tolerance=0.1):
    """Finds the factor f for which d = f log n leaves an expected
    tolerance of vertices off i* after one round

    Parameters
    ----------
    n: int
        The number of vertices, at least 3
    game_class: GameClass
        A majority regime game with payoff skew other than 1
    tolerance: float
        The accepted expected number of blocking vertices, positive

    Returns
    -------
    float
        The factor f, at least c_lambda

    """
    _spread(game_class)
    if tolerance <= 0:
        raise ParameterError("tolerance must be positive, got {}".format(tolerance))
    if n < 3:
        raise ParameterError("calibration needs n >= 3, got {}".format(n))
    scale = math.log(n)

    def excess(factor):
        estimate = one_round_holdout_estimate(n, factor * scale, game_class)
        return math.log(max(estimate, 1e-300)) - math.log(tolerance)

    lower = float(game_class.get_c_lambda())
    if excess(lower) <= 0:
        return lower
    upper = 2 * lower
    while excess(upper) > 0:
        lower, upper = upper, 2 * upper
    factor = brentq(excess, lower, upper)
    logger.info("one round factor %.4f at n=%d for %s", factor, n, game_class.describe())
    return factor
