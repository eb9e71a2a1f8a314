from math import pi

import pytest

from ramanujan_psi.oracles import zeta_direct_oracle
from ramanujan_psi.planner import plan
from ramanujan_psi.series import EvalParams, GuardBandError, SeriesError
from ramanujan_psi.series.gamma import gamma_any_x
from ramanujan_psi.series.hyperbolic import lambert_sum
from ramanujan_psi.series.identities import (asymptotic_residual, coefficient_identity_residual,
                                             csch2_expansion_residual, csch2_identity_residual,
                                             even_coefficient_residual, lambert_expansion_residual,
                                             lambert_identity_residual, lambert_linear_residual, maclaurin_slope,
                                             partial_fraction_psi_plus_gamma, psi_prime_maclaurin_residual,
                                             zeta_odd_limit_residual)
from ramanujan_psi.series.psi import psi_ramanujan

from conftest import ZETA3


def test_closed_forms(params):
    assert abs(csch2_identity_residual(params).value) <= 1e-15
    assert abs(lambert_linear_residual(params).value) <= 1e-15


@pytest.mark.parametrize("m", [3, 5])
def test_lambert_identity(table, params, m):
    assert abs(lambert_identity_residual(m, table, params)) <= 1e-14


@pytest.mark.parametrize("m", [1, 2, 4, -3])
def test_lambert_identity_rejects(table, params, m):
    with pytest.raises(SeriesError):
        lambert_identity_residual(m, table, params)


def test_zero_order_limit(table, params):
    assert abs(zeta_odd_limit_residual(table, params).value) <= 1e-13


def test_coefficient_identity(params):
    assert abs(coefficient_identity_residual(params).value) <= 1e-13


def test_asymptotic_decay(params):
    scaled = [(n + 0.5) * abs(asymptotic_residual(n + 0.5, params)) for n in (2, 5, 10, 20)]
    assert scaled[-1] <= 2 * scaled[0]


@pytest.mark.parametrize("x", [2.0, 3.25, 0.5])
def test_asymptotic_rejects(params, x):
    with pytest.raises(SeriesError):
        asymptotic_residual(x, params)


@pytest.mark.parametrize("x", [0.3, 1.7, 4.2])
def test_partial_fraction_chain(x):
    params = plan(1e-13, x)
    psi = psi_ramanujan(x, params)
    fraction = partial_fraction_psi_plus_gamma(x, params)
    gamma = gamma_any_x(x, params)
    combined = psi.error_estimate + fraction.error_estimate + gamma.error_estimate
    assert abs(psi.value - fraction.value + gamma.value) <= 2 * combined + 1e-12


def test_partial_fraction_guard():
    with pytest.raises(GuardBandError):
        partial_fraction_psi_plus_gamma(3.0, EvalParams())


def test_maclaurin_slope():
    assert maclaurin_slope(EvalParams(k_terms=10)) == pytest.approx(-2 * ZETA3, abs=1e-6)


@pytest.mark.parametrize("x", [0.05, 0.25, 0.5])
def test_lambert_expansion(params, x):
    value = lambert_expansion_residual(x, params)
    assert abs(value.value) <= value.error_estimate + 1e-15


@pytest.mark.parametrize("x", [0.05, 0.25, 0.5])
def test_csch2_expansion(params, x):
    value = csch2_expansion_residual(x, params)
    assert abs(value.value) <= value.error_estimate + 1e-15


def test_lambert_expansion_first_power_matters(params):
    # dropping the first power leaves 4 x L(3) behind
    x = 0.3
    value = lambert_expansion_residual(x, params)
    assert abs(value.value) < 1e-15 < 4 * x * lambert_sum(-3, params).value


@pytest.mark.parametrize("n, expected", [(0, pi ** 2 / 6), (1, 3 * pi ** 4 / 90), (2, 5 * pi ** 6 / 945)])
def test_even_coefficients(table, n, expected):
    assert abs(even_coefficient_residual(n, table)) <= 1e-13
    assert (2 * n + 1) * zeta_direct_oracle(2 * n + 2) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("x", [0.1, 0.3, 0.5])
def test_psi_prime_maclaurin(params, x):
    assert abs(psi_prime_maclaurin_residual(x, params)) <= 1e-10


@pytest.mark.parametrize("x", [0.0, 0.75, -0.2])
def test_expansion_rejects(params, x):
    with pytest.raises(SeriesError):
        lambert_expansion_residual(x, params)
    with pytest.raises(SeriesError):
        psi_prime_maclaurin_residual(x, params)
