from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from adideals import linalg

small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def int_matrices(draw):
    rows = draw(st.integers(1, 6))
    cols = draw(st.integers(1, 6))
    return draw(st.lists(st.lists(small_ints, min_size=cols, max_size=cols), min_size=rows, max_size=rows))


@given(int_matrices())
@settings(max_examples=200, deadline=None)
def test_rank_agrees_with_sympy(m):
    assert linalg.rank(m) == sympy.Matrix(m).rank()


@given(int_matrices(), st.integers(1, 5))
@settings(max_examples=100, deadline=None)
def test_rank_ignores_rational_scaling(m, d):
    scaled = [[Fraction(x, d) for x in row] for row in m]
    assert linalg.rank(scaled) == linalg.rank(m)


@pytest.mark.parametrize(
    "m, expected",
    [
        ([[0, 0], [0, 0]], 0),
        ([[1, 2], [2, 4]], 1),
        ([[1, 2, 3], [4, 5, 6], [7, 8, 10]], 3),
        ([[2**70, 1], [2**71, 2]], 1),
    ],
)
def test_rank_examples(m, expected):
    assert linalg.rank(m) == expected


def test_rank_of_empty_matrix():
    assert linalg.rank([]) == 0


@given(int_matrices(), st.data())
@settings(max_examples=100, deadline=None)
def test_solve_returns_exact_solution_for_consistent_systems(a, data):
    x = data.draw(st.lists(small_ints, min_size=len(a[0]), max_size=len(a[0])))
    b = [sum(r * v for r, v in zip(row, x)) for row in a]
    sol = linalg.solve(a, b)
    assert sol is not None
    assert [sum(r * v for r, v in zip(row, sol)) for row in a] == b


def test_solve_detects_inconsistency():
    assert linalg.solve([[1, 1], [2, 2]], [1, 3]) is None


def test_solve_rational_answer():
    assert linalg.solve([[2, 0], [0, 3]], [1, 1]) == [Fraction(1, 2), Fraction(1, 3)]
