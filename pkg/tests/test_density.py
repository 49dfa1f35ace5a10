"""Counting function, exponent fits, and concentration trials."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powersidon import (
    PowerSet,
    RandomModel,
    UndefinedFitError,
    concentration_trial,
    count_up_to,
    fit_density_exponent,
    geometric_grid,
)


def test_count_up_to_examples():
    squares = PowerSet(range(1, 11), 2)
    assert count_up_to(squares, 100) == 10
    assert count_up_to(squares, 0) == 0
    cubes = PowerSet([1, 9, 10, 12], 3)
    # boundary is inclusive: 1000 = 10**3 counts
    assert count_up_to(cubes, 1000) == 3
    assert count_up_to(cubes, 999) == 2
    with pytest.raises(ValueError):
        count_up_to(squares, -1)


@given(roots=st.sets(st.integers(1, 40), max_size=15), x=st.integers(0, 2000))
@settings(max_examples=60, deadline=None)
def test_count_up_to_naive_and_monotone(roots, x):
    A = PowerSet(sorted(roots), 2)
    naive = sum(1 for v in A.values if v <= x)
    assert count_up_to(A, x) == naive
    assert count_up_to(A, x) <= count_up_to(A, x + 100)


def test_geometric_grid_shape():
    grid = geometric_grid(100, 10**6)
    assert grid[0] == 100 and grid[-1] == 10**6
    assert all(b > a for a, b in zip(grid, grid[1:]))
    assert geometric_grid(50, 50) == [50]
    with pytest.raises(ValueError):
        geometric_grid(10, 5)


def test_fit_full_squares_exponent_half():
    A = PowerSet.all_powers(2, 10**6)
    fit = fit_density_exponent(A, geometric_grid(100, 10**6))
    assert abs(fit.exponent - 0.5) < 0.02
    assert not fit.dropped


def test_fit_full_cubes_exponent_third():
    A = PowerSet.all_powers(3, 10**7)
    fit = fit_density_exponent(A, geometric_grid(1000, 10**7))
    assert abs(fit.exponent - 1 / 3) < 0.02


def test_fit_constant_set_exponent_zero():
    single = PowerSet([3], 2)
    fit = fit_density_exponent(single, geometric_grid(10, 10**5))
    assert abs(fit.exponent) < 1e-9


def test_fit_drops_empty_points():
    A = PowerSet([100], 2)  # value 10000
    grid = geometric_grid(10, 10**6)
    fit = fit_density_exponent(A, grid)
    assert all(x < 10**4 for x in fit.dropped)
    assert all(c > 0 for _, c in fit.points)


def test_fit_errors():
    A = PowerSet([100], 2)
    with pytest.raises(UndefinedFitError):
        fit_density_exponent(A, [10, 20, 40])
    with pytest.raises(ValueError):
        fit_density_exponent(A, [10, 20])
    with pytest.raises(ValueError):
        fit_density_exponent(A, [10, 10, 20])


# --- concentration -----------------------------------------------------------


def test_concentration_deterministic_model():
    ones = RandomModel.from_table(2, [(m * m, 1.0) for m in range(1, 1001)], seed=0)
    report = concentration_trial(ones, 10**6, list(range(10)))
    assert report.expected == 1000.0
    assert all(row.count == 1000 for row in report.rows)
    assert report.violation_fraction == 0.0
    assert not report.flagged


def test_concentration_bound_equals_inverse_square():
    m = RandomModel.density_k(2, 0.1, seed=0)
    report = concentration_trial(m, 10**6, list(range(1, 26)))
    assert report.delta < 2
    rel = abs(report.chernoff_bound - report.inverse_square_bound) / report.inverse_square_bound
    assert rel < 1e-12
    assert report.inverse_square_bound == 2.0 / 10**12


def test_concentration_flagged_when_delta_large():
    sparse = RandomModel.from_table(2, [(1, 0.5), (4, 0.5)], seed=0)
    report = concentration_trial(sparse, 10**4, list(range(10)))
    assert report.flagged
    assert report.delta >= 2
    # with delta >= 2 the exponent switches to the delta/2 branch
    expected_bound = 2 * math.exp(-(report.delta / 2) * report.expected)
    assert report.chernoff_bound == pytest.approx(expected_bound, rel=1e-12)


def test_concentration_jobs_do_not_change_result():
    m = RandomModel.density_k(2, 0.1, seed=0)
    seq = concentration_trial(m, 10**5, list(range(1, 31)))
    par = concentration_trial(m, 10**5, list(range(1, 31)), jobs=4)
    assert seq == par


def test_concentration_argument_errors():
    m = RandomModel.density_k(2, 0.1, seed=0)
    with pytest.raises(ValueError, match="at least 10"):
        concentration_trial(m, 10**6, [1, 2, 3])
    with pytest.raises(ValueError, match=">= 2"):
        concentration_trial(m, 1, list(range(10)))
    empty = RandomModel.from_table(2, [(4, 0.0)], seed=0)
    with pytest.raises(ValueError, match="zero expected"):
        concentration_trial(empty, 100, list(range(10)))
