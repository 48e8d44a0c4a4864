"""The DegreePartition class splits the vertex set of a graph into the
vertices of degree at least C and the vertices of degree below C

"""

import numpy as np


class DegreePartition:
    """A container for the high and low degree vertex sets of a graph

    Attributes
    ----------
    threshold: int
        The degree threshold C
    high: numpy.ndarray
        Sorted vertices with degree at least C
    low: numpy.ndarray
        Sorted vertices with degree below C

    """
    def __init__(self, threshold, high, low):
        self._threshold = threshold
        self._high = np.asarray(high, dtype=np.int64)
        self._low = np.asarray(low, dtype=np.int64)

    def get_threshold(self):
        """Retrieves the degree threshold C"""
        return self._threshold

    def get_high(self):
        """Retrieves the vertices of degree at least C"""
        return self._high

    def get_low(self):
        """Retrieves the vertices of degree below C"""
        return self._low

    def low_mask(self, vertex_count):
        """Builds a boolean membership mask for the low degree set

        Parameters
        ----------
        vertex_count: int
            The number of vertices of the graph the partition came from

        Returns
        -------
        numpy.ndarray
            A boolean array, True at the low degree vertices

        """
        mask = np.zeros(vertex_count, dtype=bool)
        mask[self._low] = True
        return mask
