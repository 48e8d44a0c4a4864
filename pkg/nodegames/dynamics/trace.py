"""The Trace class records a run of the dynamics: the visited states
that were kept, the per step strategy counts and the detected cycle

"""

import numpy as np
import pandas as pd


class Trace:
    """The record of one run of the dynamics

    Attributes
    ----------
    initial: StrategyState
        The state S_0
    states: dict
        Maps a time t to the recorded state S_t. Depending on the record
        mode only a window of the most recent states is kept
    ones: numpy.ndarray
        |P_t| for every t = 0..T
    vertex_count: int
        The number of vertices n
    cycle: tuple or None
        (entry time tau, period rho) with S_{tau + rho} = S_tau, rho
        minimal; None when no state repeated within the step budget

    """
    def __init__(self, initial, states, ones, cycle):
        self._initial = initial
        self._states = dict(states)
        self._ones = np.asarray(ones, dtype=np.int64)
        self._ones.setflags(write=False)
        self._vertex_count = initial.get_length()
        self._cycle = cycle

    def get_initial(self):
        """Retrieves S_0"""
        return self._initial

    def get_vertex_count(self):
        """Retrieves the number of vertices n"""
        return self._vertex_count

    def get_steps(self):
        """Retrieves the last recorded time T"""
        return int(self._ones.size - 1)

    def has_cycle(self):
        """Checks whether a repeated state was found"""
        return self._cycle is not None

    def get_cycle(self):
        """Retrieves (entry time, period) or None"""
        return self._cycle

    def get_entry_time(self):
        """Retrieves the cycle entry time tau, None without a cycle"""
        return None if self._cycle is None else self._cycle[0]

    def get_period(self):
        """Retrieves the minimal period rho, None without a cycle"""
        return None if self._cycle is None else self._cycle[1]

    def state_at(self, t):
        """Retrieves S_t

        States inside a detected cycle repeat, so S_t is available for
        every t past the cycle entry as long as the cycle was recorded.
        The entry state may be served by its repeat at entry + period

        Parameters
        ----------
        t: int
            The time step

        Returns
        -------
        StrategyState or None
            The state, or None when it was not kept

        """
        if self._cycle is not None and t >= self._cycle[0]:
            entry, period = self._cycle
            t = entry + (t - entry) % period
            if t not in self._states:
                t += period
        return self._states.get(t)

    def get_recorded_times(self):
        """Lists the times whose full state was kept, ascending"""
        return sorted(self._states)

    def get_ones_series(self):
        """Retrieves |P_t| for t = 0..T"""
        return self._ones

    def get_zeros_series(self):
        """Retrieves |N_t| for t = 0..T"""
        return self._vertex_count - self._ones

    def get_eta_series(self):
        """Retrieves the majority gap eta_t = ||P_t| - |N_t|| for t = 0..T"""
        return np.abs(2 * self._ones - self._vertex_count)

    def get_mu_series(self):
        """Retrieves the minority size mu_t = min(|P_t|, |N_t|)"""
        return np.minimum(self._ones, self._vertex_count - self._ones)

    def get_minority_series(self):
        """Retrieves the minority strategy m_t, ties resolved to 0"""
        return (self._ones < self._vertex_count - self._ones).astype(np.int64)

    def step_statistics(self):
        """Collects the per step counts into a table

        Returns
        -------
        pandas.DataFrame
            Columns t, ones, zeros, eta, mu and minority, one row per
            recorded time

        """
        return pd.DataFrame({
            "t": np.arange(self._ones.size),
            "ones": self._ones,
            "zeros": self.get_zeros_series(),
            "eta": self.get_eta_series(),
            "mu": self.get_mu_series(),
            "minority": self.get_minority_series()})

    def to_dict(self, include_states=False):
        """Exports the trace as a JSON friendly dict

        Parameters
        ----------
        include_states: bool
            Whether to add the recorded states as state literals

        Returns
        -------
        dict
            The vertex count, the cycle, the per step statistics and
            optionally the states

        """
        document = {
            "n": self._vertex_count,
            "steps": self.get_steps(),
            "cycle": None if self._cycle is None else {"entry": self._cycle[0], "period": self._cycle[1]},
            "per_step": [{key: int(value) for key, value in row.items()}
                         for row in self.step_statistics().to_dict(orient="records")]}
        if include_states:
            document["states"] = {str(t): self._states[t].to_literal() for t in self.get_recorded_times()}
        return document
