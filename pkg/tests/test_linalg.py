from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from nfl_lab.linalg import AffineSolution, Inconsistency, dot, gram_schmidt, solve

small = st.integers(-4, 4).map(Fraction)


def test_unique_solution():
    sol = solve([[2, 1], [1, -1]], [3, 0])
    assert isinstance(sol, AffineSolution) and sol.particular == (1, 1) and sol.nullspace == ()


def test_inconsistent_certificate():
    a, b = [[1, 1], [2, 2]], [1, 3]
    res = solve(a, b)
    assert isinstance(res, Inconsistency)
    y = res.multipliers
    assert all(dot(y, col) == 0 for col in zip(*a)) and dot(y, b) == res.residual != 0


def test_nullspace():
    sol = solve([[1, 1, 1]], [3])
    assert sol.rank == 1 and len(sol.nullspace) == 2
    for v in sol.nullspace:
        assert sum(v) == 0


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=4), st.lists(small, min_size=4, max_size=4))
def test_solve_is_sound(a, b):
    b = b[: len(a)]
    res = solve(a, b, 3)
    if isinstance(res, AffineSolution):
        for row, rhs in zip(a, b):
            assert dot(row, res.particular) == rhs
            for v in res.nullspace:
                assert dot(row, v) == 0
    else:
        assert all(dot(res.multipliers, col) == 0 for col in zip(*a))
        assert dot(res.multipliers, b) == res.residual != 0


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=4))
def test_gram_schmidt_orthogonal(vs):
    out = gram_schmidt([tuple(v) for v in vs])
    for i in range(len(out)):
        for j in range(i):
            assert dot(out[i], out[j]) == 0
