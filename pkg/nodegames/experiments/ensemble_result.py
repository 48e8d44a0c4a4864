"""Per trial records of an ensemble and the aggregates computed from them

"""

import json
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
import pandas as pd

CSV_COLUMNS = ("trial", "seed", "rounds_to_unanimity", "mode", "period", "eta_final")


@dataclass(frozen=True)
class TrialRecord:
    """The outcome of one trial

    ``mode`` is "fixed", "alternating" or "periodic" for unanimous
    trials and "not_unanimous" or "inconclusive" otherwise. ``strategy``
    is the unanimous strategy (at even steps for the alternating mode)
    and ``initial_majority`` is M_0

    """
    trial: int
    seed: int
    rounds_to_unanimity: Optional[int]
    mode: str
    period: Optional[int]
    eta_series: Tuple[int, ...]
    initial_majority: int
    strategy: Optional[int] = None
    star_count: Optional[int] = None
    target_size: Optional[int] = None

    @property
    def eta_final(self):
        """The last entry of the eta series"""
        return self.eta_series[-1]

    def is_unanimous(self):
        """Whether the trial reached unanimity"""
        return self.rounds_to_unanimity is not None

    def is_conclusive(self):
        """Whether the trial ended on a detected cycle"""
        return self.mode != "inconclusive"


class EnsembleResult:
    """The records of an ensemble, sorted by trial index

    Attributes
    ----------
    config: dict
        The resolved configuration the ensemble ran with, see
        ExperimentConfig.to_dict
    records: list
        TrialRecord objects, one per trial

    """
    def __init__(self, config, records):
        self._config = dict(config)
        self._records = sorted(records, key=lambda record: record.trial)

    def get_config(self):
        """Retrieves the resolved configuration of the ensemble

        Returns
        -------
        dict
            The configuration header

        """
        return self._config

    def get_records(self):
        """Retrieves the records, sorted by trial index

        Returns
        -------
        list
            TrialRecord objects

        """
        return self._records

    def get_trial_count(self):
        """Retrieves the number of trials

        Returns
        -------
        int
            The number of records

        """
        return len(self._records)

    def get_conclusive_count(self):
        """The number of trials whose run found a cycle"""
        return sum(record.is_conclusive() for record in self._records)

    def get_unanimous_count(self):
        """Retrieves the number of trials that reached unanimity

        Returns
        -------
        int
            The unanimous trial count

        """
        return sum(record.is_unanimous() for record in self._records)

    def u_hat(self):
        """Estimates the probability of unanimity

        Inconclusive trials are left out of the estimate

        Returns
        -------
        float
            The fraction of conclusive trials that were unanimous, nan
            when no trial was conclusive

        """
        conclusive = self.get_conclusive_count()
        if conclusive == 0:
            return math.nan
        return self.get_unanimous_count() / conclusive

    def u_hat_stderr(self):
        """The standard error sqrt(u (1 - u) / trials) of u_hat over the
        conclusive trials"""
        conclusive = self.get_conclusive_count()
        if conclusive == 0:
            return math.nan
        u = self.u_hat()
        return math.sqrt(u * (1 - u) / conclusive)

    def to_frame(self):
        """Tabulates the records with the fixed CSV columns

        Returns
        -------
        pandas.DataFrame
            Columns trial, seed, rounds_to_unanimity, mode, period and
            eta_final; missing values use the nullable Int64 type

        """
        frame = pd.DataFrame({
            "trial": [record.trial for record in self._records],
            "seed": [str(record.seed) for record in self._records],
            "rounds_to_unanimity": pd.array([record.rounds_to_unanimity for record in self._records],
                                            dtype="Int64"),
            "mode": [record.mode for record in self._records],
            "period": pd.array([record.period for record in self._records], dtype="Int64"),
            "eta_final": pd.array([record.eta_final for record in self._records], dtype="Int64")},
            columns=list(CSV_COLUMNS))
        return frame.astype({"trial": "int64"})

    def to_csv(self, path=None):
        """Writes the per trial CSV

        Parameters
        ----------
        path: str, pathlib.Path or None
            Where to write; when None the CSV text is returned

        Returns
        -------
        str or None
            The CSV text when no path is given

        """
        return self.to_frame().to_csv(path, index=False, lineterminator="\n")

    def aggregate(self):
        """Computes the aggregate block of the ensemble

        Returns
        -------
        dict
            Trial counts, u_hat and its standard error, statistics of the
            rounds to unanimity over unanimous trials and of the star
            counts when they were recorded

        """
        rounds = pd.Series([record.rounds_to_unanimity for record in self._records
                            if record.is_unanimous()], dtype="float64")
        stars = [record.star_count for record in self._records if record.star_count is not None]
        block = {
            "trials": self.get_trial_count(),
            "conclusive": self.get_conclusive_count(),
            "unanimous": self.get_unanimous_count(),
            "u_hat": self.u_hat(),
            "u_hat_stderr": self.u_hat_stderr(),
            "rounds_mean": rounds.mean(),
            "rounds_median": rounds.quantile(0.5),
            "rounds_q90": rounds.quantile(0.9),
            "rounds_max": rounds.max(),
            "modes": {mode: int(count) for mode, count in
                      sorted(pd.Series([record.mode for record in self._records]).value_counts().items())}}
        if stars:
            block["star_count_mean"] = float(np.mean(stars))
        return {key: _finite_or_none(value) for key, value in block.items()}

    def aggregate_json(self):
        """The aggregate block and the configuration as a JSON document"""
        return json.dumps({"config": self._config, "aggregate": self.aggregate()}, indent=2, sort_keys=True)


def _finite_or_none(value):
    if isinstance(value, (float, np.floating)):
        return None if math.isnan(value) else float(value)
    return value
