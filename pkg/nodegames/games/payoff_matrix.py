"""The PayoffMatrix class holds the four exact rational entries of a 2x2
game, indexed by (own strategy, opponent strategy)

"""

import math
import re
from fractions import Fraction

from nodegames.tools.exceptions import ParameterError, ParseError

ENTRY_LIMIT = 1 << 63
_ENTRY_PATTERN = re.compile(r"^[+-]?\d+(/\d+)?$")


def _as_entry(value):
    entry = Fraction(value)
    if abs(entry.numerator) >= ENTRY_LIMIT or entry.denominator >= ENTRY_LIMIT:
        raise ParameterError("payoff entry {} does not fit in 64 bits".format(entry))
    return entry


class PayoffMatrix:
    """An exact 2x2 payoff matrix

    Attributes
    ----------
    q00, q01, q10, q11: fractions.Fraction
        The payoff q_ij received by a player using strategy i against an
        opponent using strategy j. Entries are kept in lowest terms with
        a positive denominator

    Parameters
    ----------
    q00, q01, q10, q11: int, str or fractions.Fraction
        Anything fractions.Fraction accepts, for example 3, "-2/5" or
        Fraction(1, 3)

    """
    def __init__(self, q00, q01, q10, q11):
        self._entries = ((_as_entry(q00), _as_entry(q01)),
                         (_as_entry(q10), _as_entry(q11)))
        scale = math.lcm(*(entry.denominator for row in self._entries for entry in row))
        self._integer_entries = tuple(tuple(int(entry * scale) for entry in row)
                                      for row in self._entries)

    def entry(self, own, other):
        """Retrieves q_{own, other}

        Parameters
        ----------
        own: int
            The strategy of the player receiving the payoff
        other: int
            The strategy of the opponent

        Returns
        -------
        fractions.Fraction
            The payoff entry

        """
        return self._entries[own][other]

    def get_entries(self):
        """Retrieves the entries as ((q00, q01), (q10, q11))"""
        return self._entries

    def get_integer_entries(self):
        """Retrieves the entries scaled by the least common denominator

        Scaling by a positive constant changes no payoff comparison, so
        the evolution rule can be evaluated on these integers exactly

        Returns
        -------
        tuple
            ((a00, a01), (a10, a11)) of Python integers

        """
        return self._integer_entries

    def scaled(self, factor):
        """Multiplies every entry by a rational factor"""
        factor = Fraction(factor)
        return PayoffMatrix(*(entry * factor for row in self._entries for entry in row))

    def column_shifted(self, column, shift):
        """Adds a constant to both entries of one column"""
        entries = [list(row) for row in self._entries]
        entries[0][column] += Fraction(shift)
        entries[1][column] += Fraction(shift)
        return PayoffMatrix(entries[0][0], entries[0][1], entries[1][0], entries[1][1])

    def to_literal(self):
        """Formats the matrix as the literal "q00,q01;q10,q11"

        Returns
        -------
        str
            The matrix literal, parseable by parse_matrix_literal

        """
        return ";".join(",".join(str(entry) for entry in row) for row in self._entries)

    def __eq__(self, other):
        if not isinstance(other, PayoffMatrix):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        return "PayoffMatrix('{}')".format(self.to_literal())


def parse_matrix_literal(literal):
    """Parses a matrix literal such as "-2,2;0,1" or "1/2,0;0,3/4"

    Parameters
    ----------
    literal: str
        Two rows separated by ";", each holding two entries separated by
        ",". An entry is an integer or a rational "a/b"

    Returns
    -------
    PayoffMatrix
        The parsed matrix

    """
    rows = literal.strip().split(";")
    if len(rows) != 2:
        raise ParseError("matrix literal '{}' must have two rows separated by ';'".format(literal))
    entries = []
    for row in rows:
        cells = [cell.strip() for cell in row.split(",")]
        if len(cells) != 2:
            raise ParseError("matrix literal row '{}' must have two entries".format(row))
        for cell in cells:
            if not _ENTRY_PATTERN.match(cell):
                raise ParseError("matrix entry '{}' is not an integer or a/b rational".format(cell))
            try:
                entries.append(Fraction(cell))
            except ZeroDivisionError as err:
                raise ParseError("matrix entry '{}' has a zero denominator".format(cell)) from err
    return PayoffMatrix(*entries)


def hawk_dove_matrix(resource, price):
    """Builds the Hawk-Dove payoff matrix

    Strategy 0 is hawk and strategy 1 is dove. Two hawks split the
    resource and both pay the injury price, a hawk takes the whole
    resource from a dove and two doves share it

    Parameters
    ----------
    resource: int or fractions.Fraction
        The value R of the contested resource
    price: int or fractions.Fraction
        The injury price P, larger than R

    Returns
    -------
    PayoffMatrix
        [[(R - P)/2, R], [0, R/2]], a minority regime game with
        skew R / (P - R)

    """
    resource = Fraction(resource)
    price = Fraction(price)
    if not 0 < resource < price:
        raise ParameterError("Hawk-Dove needs 0 < R < P, got R={} P={}".format(resource, price))
    return PayoffMatrix((resource - price) / 2, resource, 0, resource / 2)


def prisoners_dilemma_matrix(silent, both_confess, sucker):
    """Builds the Prisoners dilemma payoff matrix

    Strategy 0 is defect and strategy 1 is cooperate, payoffs are
    negated sentence lengths

    Parameters
    ----------
    silent: int or fractions.Fraction
        Sentence S when both stay silent
    both_confess: int or fractions.Fraction
        Sentence R when both confess
    sucker: int or fractions.Fraction
        Sentence P of a silent player whose partner confessed

    Returns
    -------
    PayoffMatrix
        [[-R, 0], [-P, -S]], a degenerate game where defecting dominates

    """
    silent, both_confess, sucker = Fraction(silent), Fraction(both_confess), Fraction(sucker)
    if not 0 < silent < both_confess < sucker:
        raise ParameterError("Prisoners dilemma needs 0 < S < R < P")
    return PayoffMatrix(-both_confess, 0, -sucker, -silent)
