from math import log

import pytest

from ramanujan_psi.oracles import psi_oracle
from ramanujan_psi.oracles.quadrature import s_integral_oracle
from ramanujan_psi.planner import plan
from ramanujan_psi.series import EvalParams, SeriesError
from ramanujan_psi.series.clausen import clausen_values
from ramanujan_psi.series.double_series import double_series_S
from ramanujan_psi.series.psi import psi_ramanujan


@pytest.mark.parametrize("x", [0.3, 1.2])
def test_matches_integral(x):
    result = double_series_S(x, plan(1e-13, x))
    assert abs(result.value - s_integral_oracle(x)) <= 1e-9


@pytest.mark.parametrize("step", [1e-9, 1e-12])
def test_continuous_at_integer(step):
    params = EvalParams(k_terms=8, n_terms=2000)
    at_two = double_series_S(2.0, params)
    assert at_two.n_used == 0
    near = double_series_S(2.0 + step, params)
    # S has a step * log(step) term at the integers
    allowed = step * abs(log(step)) + near.error_estimate + at_two.error_estimate
    assert abs(near.value - at_two.value) <= allowed


def test_sine_clausen_vanishes_at_integer():
    cl2, cl4, _, _ = clausen_values(0.0)
    assert abs(cl2) <= 1e-15 and abs(cl4) <= 1e-15


def test_error_estimate_covers_longer_run():
    x = 0.7
    coarse = double_series_S(x, EvalParams(k_terms=4, n_terms=200))
    fine = double_series_S(x, EvalParams(k_terms=16, n_terms=4000))
    assert abs(coarse.value - fine.value) <= coarse.error_estimate


def test_outer_terms_scale_with_x():
    result = double_series_S(0.25, EvalParams(k_terms=6, n_terms=100))
    assert result.s_used == 24


def test_rejects_non_positive():
    with pytest.raises(SeriesError):
        double_series_S(0.0, EvalParams())


@pytest.mark.parametrize("x, tol", [(0.1, 1e-9), (0.15, 1e-10), (0.3, 1e-13)])
def test_error_estimate_covers_small_x(x, tol):
    result = psi_ramanujan(x, plan(tol, x))
    assert abs(result.value - psi_oracle(x)) <= result.error_estimate + 2e-15


def test_rounding_bound_reported():
    # cancellation at small x shows up in the bound, not only the tails
    coarse = double_series_S(0.1, EvalParams(k_terms=8, s_terms=150, n_terms=5000))
    assert coarse.error_estimate > 1e-12
    fine = double_series_S(0.6, EvalParams(k_terms=8, s_terms=40, n_terms=5000))
    assert fine.error_estimate < coarse.error_estimate
