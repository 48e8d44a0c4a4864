"""Classification of payoff matrices into the degenerate, majority and
minority regimes, together with the constants derived from the payoff
skew lambda

"""

import math
from enum import Enum
from fractions import Fraction

from nodegames.tools.exceptions import ParameterError


class GameKind(Enum):
    """The regime a payoff matrix belongs to"""
    DEGENERATE = "Degenerate"
    MAJORITY = "Majority"
    MINORITY = "Minority"


def exact_ceiling(x):
    """Rounds a positive rational up, leaving integers unchanged

    Parameters
    ----------
    x: fractions.Fraction
        A positive rational

    Returns
    -------
    int
        x itself when x is an integer, otherwise floor(x) + 1

    """
    x = Fraction(x)
    if x.denominator == 1:
        return x.numerator
    return math.floor(x) + 1


def derived_constants(lam):
    """Computes the constants that govern a game with payoff skew lambda

    Parameters
    ----------
    lam: fractions.Fraction
        The payoff skew, a positive rational

    Returns
    -------
    int or None, int, int, fractions.Fraction
        i_star, the favoured strategy with lambda^(1 - 2 i_star) < 1
        (None when lambda = 1); ell_lambda = ceil(max(lambda, 1/lambda))
        with integers left unchanged; ell_lambda_prime =
        floor(max(lambda, 1/lambda)); c_lambda = 1 / (ell_lambda + 1)

    """
    lam = Fraction(lam)
    if lam <= 0:
        raise ParameterError("payoff skew must be positive, got {}".format(lam))
    if lam < 1:
        i_star = 0
    elif lam > 1:
        i_star = 1
    else:
        i_star = None
    spread = max(lam, 1 / lam)
    ell_lambda = exact_ceiling(spread)
    return i_star, ell_lambda, math.floor(spread), Fraction(1, ell_lambda + 1)


class GameClass:
    """The classification of a payoff matrix

    Attributes
    ----------
    kind: GameKind
        Degenerate, majority or minority regime
    dominant_row: int or None
        For degenerate games, the row that weakly dominates with at least
        one strict inequality; None when both rows pay the same. Always
        None for non-degenerate games
    lam: fractions.Fraction or None
        The payoff skew (q11 - q01) / (q00 - q10), present iff the game is
        non-degenerate
    i_star: int or None
        The favoured strategy, absent for degenerate games and for
        lambda = 1
    ell_lambda: int or None
    ell_lambda_prime: int or None
    c_lambda: fractions.Fraction or None
        See derived_constants

    """
    def __init__(self, kind, lam=None, dominant_row=None):
        self._kind = kind
        self._dominant_row = dominant_row
        self._lam = None if lam is None else Fraction(lam)
        if kind is GameKind.DEGENERATE:
            self._i_star = self._ell_lambda = self._ell_lambda_prime = self._c_lambda = None
        else:
            if self._lam is None:
                raise ParameterError("a non-degenerate game needs a payoff skew")
            (self._i_star, self._ell_lambda,
             self._ell_lambda_prime, self._c_lambda) = derived_constants(self._lam)

    @classmethod
    def majority(cls, lam):
        """Builds the majority regime class with payoff skew lam"""
        return cls(GameKind.MAJORITY, lam)

    @classmethod
    def minority(cls, lam):
        """Builds the minority regime class with payoff skew lam"""
        return cls(GameKind.MINORITY, lam)

    def get_kind(self):
        """Retrieves the regime of the game"""
        return self._kind

    def is_degenerate(self):
        """Checks whether the game is degenerate"""
        return self._kind is GameKind.DEGENERATE

    def get_dominant_row(self):
        """Retrieves the dominant row of a degenerate game"""
        return self._dominant_row

    def get_lambda(self):
        """Retrieves the payoff skew lambda"""
        return self._lam

    def get_i_star(self):
        """Retrieves the favoured strategy i*"""
        return self._i_star

    def get_ell_lambda(self):
        """Retrieves ell_lambda"""
        return self._ell_lambda

    def get_ell_lambda_prime(self):
        """Retrieves ell'_lambda"""
        return self._ell_lambda_prime

    def get_c_lambda(self):
        """Retrieves c_lambda"""
        return self._c_lambda

    def describe(self):
        """Formats the classification on one line

        Returns
        -------
        str
            For example "Minority λ=1/2 i*=0 ℓ=2 ℓ'=2 c=1/3" or
            "Degenerate dominant_row=0"

        """
        if self.is_degenerate():
            row = "none" if self._dominant_row is None else self._dominant_row
            return "Degenerate dominant_row={}".format(row)
        parts = ["{} λ={}".format(self._kind.value, self._lam)]
        if self._i_star is not None:
            parts.append("i*={}".format(self._i_star))
        parts.append("ℓ={} ℓ'={} c={}".format(self._ell_lambda, self._ell_lambda_prime, self._c_lambda))
        return " ".join(parts)

    def to_dict(self):
        """Collects the classification into a JSON friendly dict"""
        def text(value):
            return None if value is None else str(value)
        return {"kind": self._kind.value, "dominant_row": self._dominant_row,
                "lambda": text(self._lam), "i_star": self._i_star,
                "ell_lambda": self._ell_lambda, "ell_lambda_prime": self._ell_lambda_prime,
                "c_lambda": text(self._c_lambda)}

    def __eq__(self, other):
        if not isinstance(other, GameClass):
            return NotImplemented
        return (self._kind, self._lam, self._dominant_row) == (other._kind, other._lam, other._dominant_row)

    def __hash__(self):
        return hash((self._kind, self._lam, self._dominant_row))

    def __repr__(self):
        return "GameClass({})".format(self.describe())


def classify(q):
    """Classifies a payoff matrix

    Parameters
    ----------
    q: PayoffMatrix
        The payoff matrix

    Returns
    -------
    GameClass
        Majority iff q00 > q10 and q11 > q01, minority iff q00 < q10 and
        q01 > q11, degenerate otherwise

    """
    (q00, q01), (q10, q11) = q.get_entries()
    if q00 > q10 and q11 > q01:
        return GameClass(GameKind.MAJORITY, (q11 - q01) / (q00 - q10))
    if q00 < q10 and q01 > q11:
        return GameClass(GameKind.MINORITY, (q11 - q01) / (q00 - q10))
    if q00 >= q10 and q01 >= q11 and (q00 > q10 or q01 > q11):
        return GameClass(GameKind.DEGENERATE, dominant_row=0)
    if q10 >= q00 and q11 >= q01 and (q10 > q00 or q11 > q01):
        return GameClass(GameKind.DEGENERATE, dominant_row=1)
    return GameClass(GameKind.DEGENERATE)
