import random
from fractions import Fraction

import pytest

import constructions
from exactreal import ExactReal

# Factors of length 5 of the slope sqrt(2)/4 word.
ROOT2_OVER_4_FACTORS = {"01001", "10010", "00101", "01010", "10100", "00100"}


@pytest.fixture(scope="session")
def golden():
    '''(sqrt(5) - 1)/2'''
    return ExactReal(-1, 1, 2, 5)


@pytest.fixture(scope="session")
def fibonacci():
    '''(3 - sqrt(5))/2, whose tower has d = (1, 1, 1, ...).'''
    return ExactReal(3, -1, 2, 5)


@pytest.fixture(scope="session")
def root2_over_4():
    return ExactReal(0, 1, 4, 2)


@pytest.fixture(scope="session")
def five_letter_factors():
    return ROOT2_OVER_4_FACTORS


@pytest.fixture(scope="session")
def golden_rep(golden):
    '''The golden rotation orbit from 1/3, 10^4 values.'''
    return constructions.sturmian_representative(golden, ExactReal(1, 0, 3), 10_000)


@pytest.fixture(scope="session")
def example1_rep():
    return constructions.example1_representative(100)


@pytest.fixture(scope="session")
def chain_thresholds():
    """
    Longest 2-monotone chains in any golden rotation orbit.

    Increasing steps of gap 2 add 2*sigma - 1 ~ 0.236, so at most five fit
    in [0, 1); decreasing steps subtract at least 1 - sigma ~ 0.382.
    """
    return {"increasing": 5, "decreasing": 3}


@pytest.fixture(scope="session")
def golden_discrepancy_bound():
    return Fraction(1, 100)


@pytest.fixture
def rng():
    return random.Random(20150601)
