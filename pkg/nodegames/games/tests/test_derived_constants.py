# -*- coding: utf-8 -*-

from fractions import Fraction
import pytest
from nodegames.games.game_class import GameClass, derived_constants, exact_ceiling
from nodegames.tools.exceptions import ParameterError


def test_half():
    assert derived_constants(Fraction(1, 2)) == (0, 2, 2, Fraction(1, 3))


def test_three_halves():
    assert derived_constants(Fraction(3, 2)) == (1, 2, 1, Fraction(1, 3))


def test_one():
    assert derived_constants(1) == (None, 1, 1, Fraction(1, 2))


@pytest.mark.parametrize("lam, expected", [
    (Fraction(2, 5), (0, 3, 2, Fraction(1, 4))), (Fraction(5, 2), (1, 3, 2, Fraction(1, 4))),
    (3, (1, 3, 3, Fraction(1, 4))), (Fraction(1, 3), (0, 3, 3, Fraction(1, 4)))])
def test_other_skews(lam, expected):
    assert derived_constants(lam) == expected


@pytest.mark.parametrize("lam", [0, -1, Fraction(-1, 2)])
def test_non_positive_skew(lam):
    with pytest.raises(ParameterError):
        derived_constants(lam)


def test_exact_ceiling_keeps_integers():
    assert exact_ceiling(2) == 2
    assert exact_ceiling(Fraction(5, 2)) == 3
    assert exact_ceiling(Fraction(1, 7)) == 1


def test_game_class_carries_constants():
    cls = GameClass.majority(2)
    assert cls.get_i_star() == 1
    assert cls.get_ell_lambda() == 2
    assert cls.get_ell_lambda_prime() == 2
    assert cls.get_c_lambda() == Fraction(1, 3)
