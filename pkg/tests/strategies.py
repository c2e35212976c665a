"""Shared hypothesis strategies: small rational points."""
from fractions import Fraction

from hypothesis import strategies as st

from mwgdraw.geometry import Point

coord = st.builds(Fraction, st.integers(-12, 12), st.sampled_from([1, 1, 1, 2, 3]))
points = st.builds(Point, coord, coord)
small_int_points = st.builds(Point, st.integers(-6, 6), st.integers(-6, 6))


def distinct_points(min_size=1, max_size=8, base=points):
    return st.lists(base, min_size=min_size, max_size=max_size, unique=True)
