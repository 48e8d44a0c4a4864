"""Configuration of a Monte Carlo ensemble: the graph size, how the edge
density is chosen, the game, the number of trials and the seed. A
configuration is built directly or read from a flat ``key = value``
text file with load_experiment_config

"""

import logging
import math
from pathlib import Path

from nodegames.dynamics.dynamics_utils import default_max_steps
from nodegames.games.game_class import GameKind, classify
from nodegames.games.payoff_matrix import PayoffMatrix, parse_matrix_literal
from nodegames.tools.exceptions import ConfigError, UnsupportedError

logger = logging.getLogger(__name__)

TARGETS = ("whole_graph", "largest_component")
THRESHOLD_BASES = ("c_lambda_log", "half_log")
MAX_SEED = (1 << 64) - 1


class DensitySpec:
    """How the edge probability of G(n, p) is chosen

    Attributes
    ----------
    kind: str
        "p" for a fixed edge probability, "d" for a fixed expected
        degree with p = d / n, "threshold" for
        d = base(n) + loglog_coeff * log log n + omega
    value: float or None
        The edge probability or the expected degree
    threshold_base: str or None
        "c_lambda_log" for c_lambda log n or "half_log" for log(n) / 2
    loglog_coeff: float or None
    omega: float or None

    """
    def __init__(self, kind, value=None, threshold_base=None, loglog_coeff=None, omega=None):
        if kind not in ("p", "d", "threshold"):
            raise ConfigError([(None, "unknown density kind {!r}".format(kind))])
        if kind == "threshold" and threshold_base not in THRESHOLD_BASES:
            raise ConfigError([(None, "threshold_base must be one of {}, got {!r}".format(
                    ", ".join(THRESHOLD_BASES), threshold_base))])
        self._kind = kind
        self._value = None if value is None else float(value)
        self._threshold_base = threshold_base
        self._loglog_coeff = None if loglog_coeff is None else float(loglog_coeff)
        self._omega = None if omega is None else float(omega)

    @classmethod
    def edge_probability(cls, p):
        """A fixed edge probability p"""
        return cls("p", p)

    @classmethod
    def expected_degree(cls, d):
        """A fixed expected degree d, so p = d / n"""
        return cls("d", d)

    @classmethod
    def threshold(cls, threshold_base, loglog_coeff, omega):
        """d = base(n) + loglog_coeff * log log n + omega

        Parameters
        ----------
        threshold_base: str
            One of THRESHOLD_BASES
        loglog_coeff: float
        omega: float

        Returns
        -------
        DensitySpec
            The threshold density

        """
        return cls("threshold", threshold_base=threshold_base, loglog_coeff=loglog_coeff, omega=omega)

    @classmethod
    def for_game(cls, game_class, omega):
        """Builds the unanimity threshold of a game

        Majority games use c_lambda log n + log log n + omega, minority
        games use log(n) / 2 + (1 + ell'_lambda) / 2 log log n + omega

        Parameters
        ----------
        game_class: GameClass
            A non-degenerate class with payoff skew other than 1
        omega: float
            The correction term

        Returns
        -------
        DensitySpec
            The threshold density

        """
        if game_class.is_degenerate() or game_class.get_i_star() is None:
            raise UnsupportedError("only non-degenerate games with payoff skew other than 1 "
                                   "have a unanimity threshold, got {}".format(game_class.describe()))
        if game_class.get_kind() is GameKind.MAJORITY:
            return cls.threshold("c_lambda_log", 1.0, omega)
        return cls.threshold("half_log", (1 + game_class.get_ell_lambda_prime()) / 2, omega)

    def get_kind(self):
        """Retrieves the density kind

        Returns
        -------
        str
            "p", "d" or "threshold"

        """
        return self._kind

    def get_value(self):
        """Retrieves the edge probability or expected degree

        Returns
        -------
        float or None
            None for a threshold density

        """
        return self._value

    def get_threshold_form(self):
        """Retrieves (threshold_base, loglog_coeff, omega)"""
        return self._threshold_base, self._loglog_coeff, self._omega

    def get_key(self):
        """The configuration key that decides the resolved density"""
        return "omega" if self._kind == "threshold" else self._kind

    def resolve(self, n, game_class):
        """Turns the specification into an expected degree and an edge
        probability for graphs on n vertices

        Parameters
        ----------
        n: int
            The number of vertices
        game_class: GameClass
            The game, needed by the c_lambda log n threshold

        Returns
        -------
        float, float
            d and p = d / n

        """
        if self._kind == "p":
            p = self._value
            if not 0.0 <= p <= 1.0:
                raise ConfigError([(None, "edge probability must lie in [0, 1], got {}".format(p))])
            return p * n, p
        if self._kind == "d":
            d = self._value
        else:
            d = self._threshold_degree(n, game_class)
            if d <= 0:
                raise ConfigError([(None, "threshold density {:.6g} at n={} and omega={} is not "
                                          "positive".format(d, n, self._omega))])
        if d < 0:
            raise ConfigError([(None, "expected degree cannot be negative, got {}".format(d))])
        p = d / n
        if p > 1.0:
            raise ConfigError([(None, "expected degree {} gives edge probability {} > 1".format(d, p))])
        return d, p

    def _threshold_degree(self, n, game_class):
        if n < 3:
            raise ConfigError([(None, "threshold densities need n >= 3, got n={}".format(n))])
        if self._threshold_base == "c_lambda_log":
            if game_class.is_degenerate():
                raise ConfigError([(None, "c_lambda log n is undefined for a degenerate game")])
            base = float(game_class.get_c_lambda()) * math.log(n)
        else:
            base = math.log(n) / 2
        return base + self._loglog_coeff * math.log(math.log(n)) + self._omega

    def to_dict(self):
        """A JSON friendly description of the density"""
        if self._kind == "threshold":
            return {"kind": "threshold", "threshold_base": self._threshold_base,
                    "loglog_coeff": self._loglog_coeff, "omega": self._omega}
        return {"kind": self._kind, "value": self._value}


def find_config_problems(n, density, game_class, trials, base_seed, max_steps,
                         target="whole_graph", workers=1, omega_grid=()):
    """Validates the fields of an experiment configuration

    Returns
    -------
    list
        (key, message) tuples naming the offending configuration key,
        empty for a valid configuration

    """
    problems = []
    if n < 1:
        problems.append(("n", "n must be at least 1, got {}".format(n)))
    if trials < 1:
        problems.append(("trials", "trials must be at least 1, got {}".format(trials)))
    if not 0 <= base_seed <= MAX_SEED:
        problems.append(("base_seed", "base_seed must be a 64-bit unsigned integer, got {}".format(base_seed)))
    if max_steps < 1:
        problems.append(("max_steps", "max_steps must be at least 1, got {}".format(max_steps)))
    if target not in TARGETS:
        problems.append(("target", "target must be one of {}, got {!r}".format(", ".join(TARGETS), target)))
    if workers < 1:
        problems.append(("workers", "workers must be at least 1, got {}".format(workers)))
    if density is None:
        if not omega_grid:
            problems.append((None, "one of p, d or threshold_base is required"))
    elif n >= 1:
        try:
            density.resolve(n, game_class)
        except ConfigError as error:
            problems.extend((density.get_key(), message) for _, message in error.problems)
    return problems


class ExperimentConfig:
    """A container class holding everything that determines an ensemble

    Attributes
    ----------
    n: int
        The number of vertices of every sampled graph
    density: DensitySpec or None
        How p is chosen. May only be None when an omega grid is given,
        since a sweep sets the density itself
    matrix: PayoffMatrix
        The game
    trials: int
        The number of trials, at least 1
    base_seed: int
        The 64-bit ensemble seed every trial seed derives from
    max_steps: int or None
        The step budget of each run, default_max_steps(n) when None
    target: str
        "whole_graph" or "largest_component", the vertex set whose
        unanimity is checked
    workers: int
        The number of worker processes; never changes the results
    count_stars: bool
        Whether to count the blocking stars of each sampled graph
    omega_grid: tuple
        The omega values visited by a threshold sweep

    """
    def __init__(self, n, density, matrix, trials, base_seed, max_steps=None,
                 target="whole_graph", workers=1, count_stars=False, omega_grid=()):
        self._n = n
        self._density = density
        self._matrix = matrix if isinstance(matrix, PayoffMatrix) else parse_matrix_literal(matrix)
        self._game_class = classify(self._matrix)
        self._trials = trials
        self._base_seed = base_seed
        self._max_steps = default_max_steps(max(n, 1)) if max_steps is None else max_steps
        self._target = target
        self._workers = workers
        self._count_stars = bool(count_stars)
        self._omega_grid = tuple(float(omega) for omega in omega_grid)
        problems = find_config_problems(n, density, self._game_class, trials, base_seed,
                                        self._max_steps, target, workers, self._omega_grid)
        if problems:
            raise ConfigError([(None, message) for _, message in problems])

    def get_n(self):
        """Retrieves the number of vertices

        Returns
        -------
        int
            The number of vertices

        """
        return self._n

    def get_density(self):
        """Retrieves the density specification, None when only omega_grid is set"""
        return self._density

    def get_matrix(self):
        """Retrieves the payoff matrix

        Returns
        -------
        PayoffMatrix
            The matrix the experiment plays

        """
        return self._matrix

    def get_game_class(self):
        """Retrieves classify(matrix)"""
        return self._game_class

    def get_trials(self):
        """Retrieves the number of trials

        Returns
        -------
        int
            The number of trials, at least 1

        """
        return self._trials

    def get_base_seed(self):
        """Retrieves the seed every trial seed is derived from

        Returns
        -------
        int
            The base seed

        """
        return self._base_seed

    def get_max_steps(self):
        """Retrieves the step budget of a trial

        Returns
        -------
        int
            The maximum number of steps

        """
        return self._max_steps

    def get_target(self):
        """Retrieves what unanimity is measured on

        Returns
        -------
        str
            "whole_graph" or "largest_component"

        """
        return self._target

    def get_workers(self):
        """Retrieves the number of worker processes"""
        return self._workers

    def counts_stars(self):
        """Whether each trial also counts blocking stars"""
        return self._count_stars

    def get_omega_grid(self):
        """Retrieves the omega values of a threshold sweep

        Returns
        -------
        tuple of float
            The grid, empty when none was configured

        """
        return self._omega_grid

    def resolve_density(self):
        """Retrieves (d, p) for this configuration

        Returns
        -------
        float, float
            The expected degree and the edge probability

        """
        if self._density is None:
            raise ConfigError([(None, "the configuration has no density")])
        return self._density.resolve(self._n, self._game_class)

    def replace(self, **changes):
        """Copies the configuration with some fields changed

        Parameters
        ----------
        changes: dict
            New values keyed by constructor argument name

        Returns
        -------
        ExperimentConfig
            The changed copy, validated again

        """
        fields = {"n": self._n, "density": self._density, "matrix": self._matrix,
                  "trials": self._trials, "base_seed": self._base_seed,
                  "max_steps": self._max_steps, "target": self._target,
                  "workers": self._workers, "count_stars": self._count_stars,
                  "omega_grid": self._omega_grid}
        fields.update(changes)
        return ExperimentConfig(**fields)

    def to_dict(self):
        """Collects the resolved configuration

        The number of workers is left out since it never changes the
        results

        Returns
        -------
        dict
            A JSON friendly description, including the resolved d and p
            when the configuration has a density

        """
        document = {"n": self._n, "matrix": self._matrix.to_literal(),
                    "game": self._game_class.describe(), "trials": self._trials,
                    "base_seed": self._base_seed, "max_steps": self._max_steps,
                    "target": self._target, "count_stars": self._count_stars}
        if self._density is not None:
            d, p = self.resolve_density()
            document.update({"density": self._density.to_dict(), "d": d, "p": p})
        if self._omega_grid:
            document["omega_grid"] = list(self._omega_grid)
        return document


def _integer(text):
    return int(text, 0)


def _boolean(text):
    lowered = text.lower()
    if lowered in ("true", "yes", "on", "1"):
        return True
    if lowered in ("false", "no", "off", "0"):
        return False
    raise ValueError("expected true or false, got {!r}".format(text))


def _choice(options):
    def parse(text):
        if text not in options:
            raise ValueError("expected one of {}, got {!r}".format(", ".join(options), text))
        return text
    return parse


def _float_list(text):
    return tuple(float(part) for part in text.split(",") if part.strip())


KEY_PARSERS = {
    "n": _integer,
    "p": float,
    "d": float,
    "threshold_base": _choice(THRESHOLD_BASES),
    "loglog_coeff": float,
    "omega": float,
    "matrix": parse_matrix_literal,
    "trials": _integer,
    "base_seed": _integer,
    "max_steps": _integer,
    "target": _choice(TARGETS),
    "workers": _integer,
    "count_stars": _boolean,
    "omega_grid": _float_list,
}
REQUIRED_KEYS = ("n", "matrix", "trials", "base_seed")
THRESHOLD_KEYS = ("threshold_base", "loglog_coeff", "omega")
DENSITY_KEYS = ("p", "d") + THRESHOLD_KEYS


def _read_lines(text, problems):
    values, lines = {}, {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, separator, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not separator or not key:
            problems.append((number, "expected 'key = value', got {!r}".format(raw.strip())))
            continue
        if key not in KEY_PARSERS:
            problems.append((number, "unknown key {!r}".format(key)))
            continue
        if key in lines:
            problems.append((number, "duplicate key {!r}, first given on line {}".format(key, lines[key])))
            continue
        lines[key] = number
        try:
            values[key] = KEY_PARSERS[key](value)
        except ValueError as error:
            problems.append((number, "bad value for {}: {}".format(key, error)))
    return values, lines


def _density_from_values(values, lines, problems):
    given = [key for key in ("p", "d", "threshold_base") if key in lines]
    if len(given) > 1:
        later = max(given, key=lambda key: lines[key])
        problems.append((lines[later], "only one of p, d or threshold_base may be given"))
        return None
    if "threshold_base" not in lines:
        for key in ("loglog_coeff", "omega"):
            if key in lines:
                problems.append((lines[key], "{} needs threshold_base".format(key)))
    if not given or any(key in lines and key not in values for key in given):
        return None
    if given[0] == "p":
        return DensitySpec.edge_probability(values["p"])
    if given[0] == "d":
        return DensitySpec.expected_degree(values["d"])
    missing = [key for key in THRESHOLD_KEYS[1:] if key not in lines]
    if missing:
        problems.append((lines["threshold_base"], "threshold_base needs {}".format(" and ".join(missing))))
        return None
    if any(key not in values for key in THRESHOLD_KEYS):
        return None
    return DensitySpec.threshold(values["threshold_base"], values["loglog_coeff"], values["omega"])


def parse_experiment_config(text, overrides=None):
    """Parses the text of an experiment configuration

    Every non-blank line holds one ``key = value`` pair and ``#`` starts
    a comment. All problems are collected, each with its line, before
    anything is raised

    Parameters
    ----------
    text: str
        The configuration text
    overrides: dict or None
        Already parsed values keyed by configuration key. They replace
        the values of the text before validation; problems with them
        carry no line

    Returns
    -------
    ExperimentConfig
        The validated configuration

    """
    problems = []
    values, lines = _read_lines(text, problems)
    for key, value in (overrides or {}).items():
        if key not in KEY_PARSERS or key in DENSITY_KEYS:
            problems.append((None, "key {!r} cannot be overridden".format(key)))
            continue
        values[key] = value
        lines.pop(key, None)
    for key in REQUIRED_KEYS:
        if key not in values and key not in lines:
            problems.append((None, "missing required key {!r}".format(key)))
    density = _density_from_values(values, lines, problems)
    if not problems:
        n = values["n"]
        max_steps = values.get("max_steps", default_max_steps(max(n, 1)))
        problems.extend((lines.get(key), message) for key, message in find_config_problems(
                n, density, classify(values["matrix"]), values["trials"], values["base_seed"],
                max_steps, values.get("target", "whole_graph"), values.get("workers", 1),
                values.get("omega_grid", ())))
    if problems:
        raise ConfigError(sorted(problems, key=lambda problem: (problem[0] is None, problem[0] or 0)))
    return ExperimentConfig(values["n"], density, values["matrix"], values["trials"],
                            values["base_seed"], values.get("max_steps"),
                            values.get("target", "whole_graph"), values.get("workers", 1),
                            values.get("count_stars", False), values.get("omega_grid", ()))


def load_experiment_config(path, overrides=None):
    """Reads an experiment configuration file

    Parameters
    ----------
    path: str or pathlib.Path
        The file to read
    overrides: dict or None
        Values replacing those of the file, see parse_experiment_config

    Returns
    -------
    ExperimentConfig
        The validated configuration

    """
    path = Path(path)
    config = parse_experiment_config(path.read_text(encoding="utf-8"), overrides)
    logger.info("loaded %s: n=%d, %d trials, %s", path, config.get_n(), config.get_trials(),
                config.get_game_class().describe())
    return config
