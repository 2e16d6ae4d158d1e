import random
from fractions import Fraction

import pytest

from jumat import GaussianRational


@pytest.fixture
def rng():
    return random.Random(20240817)


def rand_fraction(rng, height=12, nonzero=False):
    num = rng.randint(-height, height)
    while nonzero and num == 0:
        num = rng.randint(-height, height)
    return Fraction(num, rng.randint(1, height))


def rand_scalar(rng, height=12, nonzero=False):
    while True:
        x = GaussianRational(rand_fraction(rng, height), rand_fraction(rng, height))
        if x or not nonzero:
            return x


def rand_vector(rng, n, height=12):
    return tuple(rand_scalar(rng, height) for _ in range(n))
