"""The Graph class is an immutable simple undirected graph on the
vertices 0, ..., n - 1, stored in compressed sparse row layout

"""

import numpy as np
import scipy.sparse as sp

from nodegames.tools.exceptions import ParameterError


class Graph:
    """An immutable sparse undirected simple graph

    Attributes
    ----------
    vertex_count: int
        The number of vertices n
    offsets: numpy.ndarray
        An int64 array of length n + 1. The neighbours of v are
        ``neighbours[offsets[v]:offsets[v + 1]]``
    neighbours: numpy.ndarray
        An int64 array holding every adjacency list back to back,
        each sorted ascending and free of duplicates
    degrees: numpy.ndarray
        The number of neighbours of each vertex

    Parameters
    ----------
    vertex_count: int
        The number of vertices
    offsets: numpy.ndarray
        Row offsets of the adjacency structure
    neighbours: numpy.ndarray
        Flat neighbour array. Use Graph.from_edges to build a graph from
        an unordered edge list instead of passing raw arrays

    """
    def __init__(self, vertex_count, offsets, neighbours):
        self._vertex_count = int(vertex_count)
        self._offsets = np.asarray(offsets, dtype=np.int64)
        self._neighbours = np.asarray(neighbours, dtype=np.int64)
        self._offsets.setflags(write=False)
        self._neighbours.setflags(write=False)
        self._degrees = np.diff(self._offsets)
        self._degrees.setflags(write=False)

    @classmethod
    def from_edges(cls, vertex_count, sources, targets):
        """Builds a graph from two parallel arrays of edge endpoints

        Self loops raise a ParameterError, repeated edges are merged

        Parameters
        ----------
        vertex_count: int
            The number of vertices
        sources: array_like
            First endpoint of every edge
        targets: array_like
            Second endpoint of every edge

        Returns
        -------
        Graph
            The graph with the given edges

        """
        if vertex_count < 0:
            raise ParameterError("vertex count must be non-negative, got {}".format(vertex_count))
        sources = np.asarray(sources, dtype=np.int64).ravel()
        targets = np.asarray(targets, dtype=np.int64).ravel()
        if sources.shape != targets.shape:
            raise ParameterError("edge endpoint arrays differ in length")
        if sources.size:
            if min(sources.min(), targets.min()) < 0 or max(sources.max(), targets.max()) >= vertex_count:
                raise ParameterError("edge endpoint outside 0..{}".format(vertex_count - 1))
            if (sources == targets).any():
                raise ParameterError("self loops are not allowed")
        rows = np.concatenate([sources, targets])
        cols = np.concatenate([targets, sources])
        order = np.lexsort((cols, rows))
        rows = rows[order]
        cols = cols[order]
        if rows.size:
            keep = np.ones(rows.size, dtype=bool)
            keep[1:] = (rows[1:] != rows[:-1]) | (cols[1:] != cols[:-1])
            rows = rows[keep]
            cols = cols[keep]
        offsets = np.zeros(vertex_count + 1, dtype=np.int64)
        np.cumsum(np.bincount(rows, minlength=vertex_count), out=offsets[1:])
        return cls(vertex_count, offsets, cols)

    @classmethod
    def from_edge_list(cls, vertex_count, edges):
        """Builds a graph from an iterable of ``(u, v)`` pairs"""
        edges = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        return cls.from_edges(vertex_count, edges[:, 0], edges[:, 1])

    def get_vertex_count(self):
        """Retrieves the number of vertices n"""
        return self._vertex_count

    def get_edge_count(self):
        """Retrieves the number of undirected edges |E|"""
        return int(self._neighbours.size // 2)

    def get_offsets(self):
        """Retrieves the read-only CSR offsets array"""
        return self._offsets

    def get_neighbour_array(self):
        """Retrieves the read-only flat neighbour array"""
        return self._neighbours

    def get_degrees(self):
        """Retrieves the read-only array of vertex degrees"""
        return self._degrees

    def degree(self, vertex):
        """Retrieves the degree of a single vertex"""
        return int(self._degrees[vertex])

    def neighbours(self, vertex):
        """Retrieves the sorted neighbours of a vertex

        Parameters
        ----------
        vertex: int
            A vertex in 0..n - 1

        Returns
        -------
        numpy.ndarray
            A read-only view of the neighbours of vertex

        """
        return self._neighbours[self._offsets[vertex]:self._offsets[vertex + 1]]

    def edges(self):
        """Lists every edge once as a pair ``(u, v)`` with u < v

        Returns
        -------
        numpy.ndarray
            An array of shape (|E|, 2), sorted by u and then by v

        """
        rows = np.repeat(np.arange(self._vertex_count, dtype=np.int64), self._degrees)
        upper = rows < self._neighbours
        return np.column_stack([rows[upper], self._neighbours[upper]])

    def neighbour_counts(self, bits):
        """Counts, for every vertex, the neighbours whose bit is set

        Parameters
        ----------
        bits: numpy.ndarray
            A 0/1 array of length n

        Returns
        -------
        numpy.ndarray
            An int64 array whose entry v is the number of neighbours u
            of v with ``bits[u] == 1``

        """
        running = np.zeros(self._neighbours.size + 1, dtype=np.int64)
        np.cumsum(bits[self._neighbours], out=running[1:])
        return running[self._offsets[1:]] - running[self._offsets[:-1]]

    def to_sparse(self):
        """Converts the graph to a scipy CSR adjacency matrix"""
        data = np.ones(self._neighbours.size, dtype=np.int8)
        return sp.csr_matrix((data, self._neighbours, self._offsets),
                             shape=(self._vertex_count, self._vertex_count))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self._vertex_count == other._vertex_count
                and np.array_equal(self._offsets, other._offsets)
                and np.array_equal(self._neighbours, other._neighbours))

    def __hash__(self):
        return hash((self._vertex_count, self._neighbours.tobytes()))

    def __repr__(self):
        return "Graph(n={}, m={})".format(self._vertex_count, self.get_edge_count())
