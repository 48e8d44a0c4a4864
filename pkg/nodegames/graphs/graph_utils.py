"""Functions that build, inspect and serialise graphs: sampling the
binomial random graph G(n, p), connected components, degree partitions
and the edge list / JSON interchange formats

"""

import json
import logging
import math

import numpy as np
from scipy.sparse.csgraph import connected_components as csgraph_components

from nodegames.graphs.degree_partition import DegreePartition
from nodegames.graphs.graph import Graph
from nodegames.tools.exceptions import ParameterError, ParseError
from nodegames.tools.seeding import make_generator

logger = logging.getLogger(__name__)

DENSE_SAMPLING_THRESHOLD = 0.1


def pair_from_index(indices):
    """Maps positions in the sequence of unordered pairs to the pairs

    The pairs (u, v) with u < v are ordered by v and then by u, so the
    pair (u, v) sits at position v(v - 1)/2 + u

    Parameters
    ----------
    indices: numpy.ndarray
        int64 positions in 0..n(n - 1)/2 - 1

    Returns
    -------
    numpy.ndarray, numpy.ndarray
        The smaller endpoints u and the larger endpoints v

    """
    indices = np.asarray(indices, dtype=np.int64)
    larger = np.floor((1.0 + np.sqrt(1.0 + 8.0 * indices.astype(np.float64))) / 2.0).astype(np.int64)
    # float rounding can be off by one either way for large positions
    triangle = larger * (larger - 1) // 2
    larger = np.where(triangle > indices, larger - 1, larger)
    triangle = larger * (larger - 1) // 2
    larger = np.where(indices >= triangle + larger, larger + 1, larger)
    triangle = larger * (larger - 1) // 2
    return indices - triangle, larger


def _skip_sample_pairs(pair_count, p, rng):
    chunks = []
    last = -1
    while True:
        remaining = pair_count - last - 1
        expected = remaining * p
        size = int(expected + 6.0 * math.sqrt(expected) + 64)
        positions = last + np.cumsum(rng.geometric(p, size=size))
        if positions[-1] >= pair_count:
            chunks.append(positions[positions < pair_count])
            break
        chunks.append(positions)
        last = int(positions[-1])
    return np.concatenate(chunks)


def _dense_sample_pairs(vertex_count, p, rng):
    sources = []
    targets = []
    for larger in range(1, vertex_count):
        smaller = np.flatnonzero(rng.random(larger) < p)
        sources.append(smaller)
        targets.append(np.full(smaller.size, larger, dtype=np.int64))
    if not sources:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    return np.concatenate(sources), np.concatenate(targets)


def sample_gnp(n, p, rng):
    """Samples the binomial random graph G(n, p)

    Each of the n(n - 1)/2 unordered pairs is an edge independently
    with probability p. Below a density of 0.1 the pairs are visited
    with geometric skips, so the running time is O(n + |E|)

    Parameters
    ----------
    n: int
        The number of vertices, at least 1
    p: float
        The edge probability in [0, 1]
    rng: int or numpy.random.Generator
        A seed or a generator created with
        nodegames.tools.seeding.make_generator

    Returns
    -------
    Graph
        The sampled graph. The same n, p and seed always give the same
        graph

    """
    if not 0.0 <= p <= 1.0 or math.isnan(p):
        raise ParameterError("edge probability must lie in [0, 1], got {}".format(p))
    if n < 1:
        raise ParameterError("a graph needs at least one vertex, got n={}".format(n))
    if not isinstance(rng, np.random.Generator):
        rng = make_generator(rng)
    pair_count = n * (n - 1) // 2
    if p == 0.0 or pair_count == 0:
        return Graph.from_edges(n, [], [])
    if p < DENSE_SAMPLING_THRESHOLD:
        sources, targets = pair_from_index(_skip_sample_pairs(pair_count, p, rng))
    else:
        sources, targets = _dense_sample_pairs(n, p, rng)
    logger.debug("sampled G(%d, %g) with %d edges", n, p, sources.size)
    return Graph.from_edges(n, sources, targets)


def component_labels(g):
    """Labels every vertex with the index of its connected component

    Component indices follow the order of connected_components: by
    decreasing size, ties broken by the smallest vertex

    Parameters
    ----------
    g: Graph
        The graph

    Returns
    -------
    numpy.ndarray
        An int64 array of component indices, one per vertex

    """
    n = g.get_vertex_count()
    if n == 0:
        return np.empty(0, dtype=np.int64)
    count, labels = csgraph_components(g.to_sparse(), directed=False)
    sizes = np.bincount(labels, minlength=count)
    smallest = np.full(count, n, dtype=np.int64)
    np.minimum.at(smallest, labels, np.arange(n, dtype=np.int64))
    order = np.lexsort((smallest, -sizes))
    rank = np.empty(count, dtype=np.int64)
    rank[order] = np.arange(count, dtype=np.int64)
    return rank[labels]


def connected_components(g):
    """Partitions the vertices into maximal connected sets

    Parameters
    ----------
    g: Graph
        The graph

    Returns
    -------
    list
        Sorted numpy arrays of vertices, one per component, largest
        first. Components of equal size are ordered by their smallest
        vertex

    """
    labels = component_labels(g)
    if labels.size == 0:
        return []
    order = np.argsort(labels, kind="stable")
    bounds = np.cumsum(np.bincount(labels))[:-1]
    return np.split(order, bounds)


def largest_component(g):
    """Retrieves the largest connected component L_1

    When several components share the largest size the one holding the
    smallest vertex is returned

    Parameters
    ----------
    g: Graph
        The graph

    Returns
    -------
    numpy.ndarray
        The sorted vertices of L_1

    """
    labels = component_labels(g)
    return np.flatnonzero(labels == 0)


def degree_partition(g, C):
    """Splits the vertices into H(C) = {d(v) >= C} and L(C) = {d(v) < C}

    Parameters
    ----------
    g: Graph
        The graph
    C: int
        The degree threshold, at least 1

    Returns
    -------
    DegreePartition
        The high and low degree vertex sets

    """
    if C < 1:
        raise ParameterError("degree threshold must be at least 1, got {}".format(C))
    degrees = g.get_degrees()
    return DegreePartition(C, np.flatnonzero(degrees >= C), np.flatnonzero(degrees < C))


def induced_subgraph(g, vertices):
    """Builds the subgraph induced by a vertex set

    Parameters
    ----------
    g: Graph
        The ambient graph
    vertices: array_like
        The vertices to keep

    Returns
    -------
    Graph, numpy.ndarray
        The induced subgraph on 0..len(vertices) - 1 and the sorted
        array mapping its vertices back to vertices of g

    """
    kept = np.unique(np.asarray(vertices, dtype=np.int64))
    relabel = np.full(g.get_vertex_count(), -1, dtype=np.int64)
    relabel[kept] = np.arange(kept.size, dtype=np.int64)
    edges = g.edges()
    inside = (relabel[edges[:, 0]] >= 0) & (relabel[edges[:, 1]] >= 0)
    edges = edges[inside]
    return Graph.from_edges(kept.size, relabel[edges[:, 0]], relabel[edges[:, 1]]), kept


def write_edge_list(g):
    """Serialises a graph to the edge list text format

    The first line holds "n m", followed by one "u v" line per edge
    with u < v

    Parameters
    ----------
    g: Graph
        The graph to serialise

    Returns
    -------
    str
        The edge list text

    """
    lines = ["{} {}".format(g.get_vertex_count(), g.get_edge_count())]
    lines.extend("{} {}".format(u, v) for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(text):
    """Parses the edge list text format

    Parameters
    ----------
    text: str
        Text in the format written by write_edge_list

    Returns
    -------
    Graph
        The parsed graph

    """
    tokens = text.split()
    if len(tokens) < 2:
        raise ParseError("edge list must start with 'n m'")
    try:
        values = [int(token) for token in tokens]
    except ValueError as err:
        raise ParseError("edge list holds a non-integer token: {}".format(err)) from err
    n, m = values[0], values[1]
    if n < 1 or m < 0:
        raise ParseError("edge list header 'n m' must have n >= 1 and m >= 0")
    if len(values) != 2 + 2 * m:
        raise ParseError("edge list header announces {} edges but {} endpoints follow"
                         .format(m, len(values) - 2))
    endpoints = np.asarray(values[2:], dtype=np.int64).reshape(-1, 2)
    return _graph_from_pairs(n, endpoints)


def graph_to_json(g):
    """Serialises a graph to the JSON interchange format

    Parameters
    ----------
    g: Graph
        The graph to serialise

    Returns
    -------
    str
        A JSON object {"n": int, "edges": [[u, v], ...]}

    """
    return json.dumps({"n": g.get_vertex_count(), "edges": g.edges().tolist()})


def graph_from_json(text):
    """Parses the JSON interchange format written by graph_to_json

    Parameters
    ----------
    text: str
        The JSON document

    Returns
    -------
    Graph
        The parsed graph

    """
    try:
        document = json.loads(text)
        n = int(document["n"])
        endpoints = np.asarray(document["edges"], dtype=np.int64).reshape(-1, 2)
    except (ValueError, KeyError, TypeError) as err:
        raise ParseError("malformed JSON graph: {}".format(err)) from err
    return _graph_from_pairs(n, endpoints)


def _graph_from_pairs(n, endpoints):
    if endpoints.size and (endpoints.min() < 0 or endpoints.max() >= n):
        raise ParseError("edge endpoint outside 0..{}".format(n - 1))
    if (endpoints[:, 0] == endpoints[:, 1]).any():
        raise ParseError("self loops are not allowed")
    canonical = np.sort(endpoints, axis=1)
    if canonical.size and np.unique(canonical, axis=0).shape[0] != canonical.shape[0]:
        raise ParseError("repeated edge in edge list")
    return Graph.from_edges(n, canonical[:, 0], canonical[:, 1])


def enumerate_graphs(n):
    """Generates every labelled simple graph on n vertices

    Parameters
    ----------
    n: int
        The number of vertices, small enough that 2^(n(n - 1)/2) graphs
        can be visited

    Yields
    ------
    Graph
        Each of the 2^(n(n - 1)/2) graphs once, in order of the bit mask
        over the pairs (u, v), u < v

    """
    pairs = np.array([(u, v) for v in range(n) for u in range(v)], dtype=np.int64).reshape(-1, 2)
    for mask in range(1 << len(pairs)):
        chosen = pairs[[(mask >> bit) & 1 == 1 for bit in range(len(pairs))]]
        yield Graph.from_edges(n, chosen[:, 0], chosen[:, 1])
