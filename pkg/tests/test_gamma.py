from dataclasses import replace

import pytest

from ramanujan_psi.oracles import re_psi_one_plus_ik
from ramanujan_psi.oracles.summation import harmonic_kernel_sum
from ramanujan_psi.planner import plan
from ramanujan_psi.series import EvalParams, GammaSource, GuardBandError, SeriesError
from ramanujan_psi.series.gamma import (gamma_any_x, gamma_at_integer, harmonic_number, integer_limit_rhs,
                                        re_psi_complex_ramanujan)

from conftest import GAMMA, ONE_MINUS_GAMMA


def test_five_terms_thirteen_places():
    params = EvalParams(k_terms=5, s_terms=5)
    value = integer_limit_rhs(1, params).value
    assert abs(value - ONE_MINUS_GAMMA) <= 5e-14
    assert int(value * 10 ** 13) == 4227843350984
    estimate = gamma_at_integer(1, params)
    assert estimate.source is GammaSource.INTEGER_LIMIT
    assert estimate.limit_value == pytest.approx(1 - GAMMA, abs=1e-14)


@pytest.mark.parametrize("m", [2, 3])
def test_other_integers(m):
    assert gamma_at_integer(m, plan(1e-13, float(m))).value == pytest.approx(GAMMA, abs=1e-11)


def test_integers_agree():
    one = gamma_at_integer(1, plan(1e-13, 1.0))
    three = gamma_at_integer(3, plan(1e-13, 3.0))
    assert abs(one.value - three.value) <= one.error_estimate + three.error_estimate + 1e-14


@pytest.mark.parametrize("m", [0, -2, 1.5])
def test_integer_rejects(m):
    with pytest.raises(SeriesError):
        gamma_at_integer(m, EvalParams())


@pytest.mark.parametrize("x", [0.5, 3.25, 2.25, 6.75])
def test_any_x(x):
    estimate = gamma_any_x(x, plan(1e-13, x))
    assert estimate.source is GammaSource.ANY_X
    assert estimate.value == pytest.approx(GAMMA, abs=1e-11)


def test_any_x_spread():
    values = [gamma_any_x(x, plan(1e-13, x)).value for x in (0.5, 2.25, 6.75)]
    assert max(values) - min(values) <= 2e-11


def test_any_x_guard_band():
    with pytest.raises(GuardBandError) as err:
        gamma_any_x(2.0005, EvalParams())
    assert err.value.nearest == 2


@pytest.mark.parametrize("x", [0.5, 1.5, 4.2])
def test_re_psi_complex(x):
    params = plan(1e-13, x)
    assert re_psi_complex_ramanujan(x, params).value == pytest.approx(re_psi_one_plus_ik(x), abs=1e-10)


def test_re_psi_plus_gamma_is_kernel():
    x = 1.7
    params = plan(1e-13, x)
    total = gamma_any_x(x, params).value + re_psi_complex_ramanujan(x, params).value
    assert total == pytest.approx(harmonic_kernel_sum(x), abs=1e-12)


def test_harmonic_number():
    assert harmonic_number(1) == 1.0
    assert harmonic_number(3) == pytest.approx(11 / 6, abs=0)


def test_compensated_matches_ordered():
    params = plan(1e-13, 0.5)
    plain = gamma_any_x(0.5, params).value
    compensated = gamma_any_x(0.5, replace(params, compensated=True)).value
    assert plain == pytest.approx(compensated, abs=1e-13)
