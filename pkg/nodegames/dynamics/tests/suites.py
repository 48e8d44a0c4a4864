# -*- coding: utf-8 -*-

from fractions import Fraction
import networkx as nx
from nodegames.games.payoff_matrix import PayoffMatrix
from nodegames.graphs.graph import Graph

SKEWS = [Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3)]
OFFSETS = [(0, 0), (Fraction(-7, 2), 4), (5, Fraction(-1, 3))]


def _majority(lam, offset, scale):
    x, y = offset
    return PayoffMatrix(x + scale * lam.denominator, y, x, y + scale * lam.numerator)


def _minority(lam, offset, scale):
    x, y = offset
    return PayoffMatrix(x, y + scale * lam.numerator, x + scale * lam.denominator, y)


def non_degenerate_suite():
    """Ten majority and ten minority matrices covering lambda <, = and > 1"""
    suite = []
    for index in range(10):
        lam = SKEWS[index % len(SKEWS)]
        offset = OFFSETS[index % len(OFFSETS)]
        scale = Fraction(index + 1, 2)
        suite.append(_majority(lam, offset, scale))
        suite.append(_minority(lam, offset, scale))
    return suite


def degenerate_suite():
    """Ten degenerate matrices with a strictly dominant row or no preference"""
    return [PayoffMatrix(*entries) for entries in [
        (1, 1, 0, 0), (2, 0, -1, -3), ("1/2", 5, "1/3", 4), (-2, 0, -3, -1), (0, 7, -1, 6),
        (0, 0, 1, 1), (-3, -1, 2, "1/2"), (1, -4, 3, -2), ("2/3", "2/3", 1, 1), (4, 4, 4, 4)]]


def atlas_graphs(max_vertices, exact=False):
    """One graph per isomorphism class on 1..max_vertices vertices, or on
    exactly max_vertices vertices when exact is set"""
    graphs = []
    for reference in nx.graph_atlas_g():
        n = reference.number_of_nodes()
        if n == 0 or n > max_vertices or (exact and n != max_vertices):
            continue
        graphs.append(Graph.from_edge_list(n, list(reference.edges())))
    return graphs
