"""The StrategyState class holds one strategy bit per vertex at a single
time step

"""

import numpy as np

from nodegames.tools.exceptions import ParameterError, ParseError


class StrategyState:
    """An immutable assignment of strategies in {0, 1} to vertices

    Attributes
    ----------
    bits: numpy.ndarray
        A read-only uint8 array, entry v is S(v)

    Parameters
    ----------
    bits: array_like
        The strategies, one per vertex, each 0 or 1

    """
    def __init__(self, bits):
        bits = np.array(bits, dtype=np.uint8).ravel()
        if bits.size and bits.max() > 1:
            raise ParameterError("strategies must be 0 or 1")
        bits.setflags(write=False)
        self._bits = bits

    def get_bits(self):
        """Retrieves the read-only strategy array"""
        return self._bits

    def get_length(self):
        """Retrieves the number of vertices the state covers"""
        return int(self._bits.size)

    def strategy(self, vertex):
        """Retrieves the strategy of one vertex"""
        return int(self._bits[vertex])

    def count_ones(self):
        """Counts |P| = |{v : S(v) = 1}|"""
        return int(np.count_nonzero(self._bits))

    def complement(self):
        """Builds the state with every strategy flipped"""
        return StrategyState(1 - self._bits)

    def with_strategies(self, vertices, values):
        """Builds a copy with some strategies overwritten

        Parameters
        ----------
        vertices: array_like
            The vertices to overwrite
        values: int or array_like
            The new strategies

        Returns
        -------
        StrategyState
            The modified copy

        """
        bits = self._bits.copy()
        bits[np.asarray(vertices, dtype=np.int64)] = values
        return StrategyState(bits)

    def key(self):
        """Packs the state into bytes usable as an exact dictionary key"""
        return np.packbits(self._bits).tobytes()

    def to_literal(self):
        """Formats the state as the literal "n:hex"

        Vertex 0 is the most significant of the n bits, so the triangle
        state [1, 1, 0] is "3:6"

        Returns
        -------
        str
            The state literal

        """
        n = self.get_length()
        if n == 0:
            return "0:0"
        value = int.from_bytes(np.packbits(self._bits).tobytes(), "big") >> (-n % 8)
        return "{}:{:x}".format(n, value)

    @classmethod
    def from_literal(cls, literal):
        """Parses a state literal written by to_literal

        Parameters
        ----------
        literal: str
            "n:hex" where hex encodes an n bit number, vertex 0 first

        Returns
        -------
        StrategyState
            The parsed state

        """
        length, _, digits = literal.strip().partition(":")
        try:
            n = int(length)
            value = int(digits, 16)
        except ValueError as err:
            raise ParseError("state literal '{}' is not of the form n:hex".format(literal)) from err
        if n < 0 or value < 0 or value.bit_length() > n:
            raise ParseError("state literal '{}' does not fit in {} bits".format(literal, length))
        return cls([int(bit) for bit in format(value, "0{}b".format(n))] if n else [])

    def __eq__(self, other):
        if not isinstance(other, StrategyState):
            return NotImplemented
        return np.array_equal(self._bits, other._bits)

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        if self.get_length() <= 32:
            return "StrategyState({})".format(self._bits.tolist())
        return "StrategyState('{}')".format(self.to_literal())


def random_state(n, rng):
    """Draws S_1/2: every vertex plays 1 with probability 1/2 independently

    Parameters
    ----------
    n: int
        The number of vertices
    rng: numpy.random.Generator
        The generator to draw from

    Returns
    -------
    StrategyState
        The random state

    """
    return StrategyState(rng.integers(0, 2, size=n, dtype=np.uint8))


def initial_majority(state):
    """Finds the most popular strategy M_0 of a state

    Ties are resolved to strategy 1, the complement of the minority
    convention which resolves ties to strategy 0

    Parameters
    ----------
    state: StrategyState
        The state

    Returns
    -------
    int
        The more frequent strategy

    """
    ones = state.count_ones()
    return 1 if ones >= state.get_length() - ones else 0


def enumerate_states(n):
    """Lists all 2^n strategy states on n vertices

    Parameters
    ----------
    n: int
        The number of vertices

    Returns
    -------
    list
        StrategyState objects ordered by the state literal value
    """
    return [StrategyState([(value >> (n - 1 - v)) & 1 for v in range(n)]) for value in range(1 << n)]
