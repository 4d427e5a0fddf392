from fractions import Fraction

import pytest
from hypothesis import strategies as st

from bivfib.gaussian import GaussianInt
from bivfib.poly import VARIABLES, MultiPoly


def int_fib(n, x=1, y=1):
    """Plain integer recurrence; independent of the polynomial machinery."""
    a, b = 0, 1
    for _ in range(n):
        a, b = b, x * b + y * a
    return a


def int_lucas(n, x=1, y=1):
    a, b = 2, x
    for _ in range(n):
        a, b = b, x * b + y * a
    return a


small_ints = st.integers(min_value=-6, max_value=6)
gaussians = st.builds(GaussianInt, small_ints, small_ints)
exponent_maps = st.dictionaries(
    st.sampled_from(VARIABLES[:4]), st.integers(min_value=-2, max_value=3), max_size=3
)
polys = st.lists(st.tuples(exponent_maps, gaussians), max_size=5).map(MultiPoly.from_terms)
real_polys = st.lists(
    st.tuples(st.dictionaries(st.sampled_from(("x", "y")), st.integers(0, 3), max_size=2), small_ints),
    max_size=5,
).map(MultiPoly.from_terms)
nonzero_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7).filter(bool)


@pytest.fixture
def grid_point():
    return {"x": Fraction(3, 2), "y": Fraction(-2, 3), "s": Fraction(5), "g": Fraction(1, 2),
            "a": Fraction(-3), "z1": Fraction(1), "z2": Fraction(2)}
