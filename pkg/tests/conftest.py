import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from lagrinv import Series

small_rationals = st.builds(
    Fraction,
    st.integers(-9, 9),
    st.integers(1, 9),
)


@st.composite
def series(draw, min_precision=0, max_precision=8, precision=None, const=None):
    n = precision if precision is not None else draw(st.integers(min_precision, max_precision))
    coeffs = draw(st.lists(small_rationals, min_size=n + 1, max_size=n + 1))
    if const is not None:
        coeffs[0] = Fraction(const)
    return Series(coeffs)


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def random_poly(rng: random.Random, max_degree: int, precision: int) -> Series:
    degree = rng.randint(0, max_degree)
    return Series([random_rational(rng) for _ in range(degree + 1)], precision)


@pytest.fixture
def rng():
    return random.Random(20261019)
