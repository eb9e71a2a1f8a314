from fractions import Fraction
from math import pi

import pytest

from ramanujan_psi.bernoulli import BernoulliError, build_bernoulli_table, paired_bernoulli_sum, shared_table
from ramanujan_psi.oracles import zeta_direct_oracle
from ramanujan_psi.series import EvalParams, ModularPair, SeriesError
from ramanujan_psi.series.zeta import zeta_even, zeta_odd, zeta_odd_general

from conftest import ZETA3, ZETA5, ZETA7

ALPHAS = [pi, pi ** 2 / 2, 2 * pi ** 2]


@pytest.mark.parametrize("n, expected", [(1, ZETA3), (2, ZETA5), (3, ZETA7)])
def test_odd(table, params, n, expected):
    value = zeta_odd(n, table, params).value
    assert abs(value - zeta_direct_oracle(2 * n + 1)) <= 1e-12
    assert value == pytest.approx(expected, abs=1e-12)


def test_exact_rational_for_three(table):
    assert paired_bernoulli_sum(table, 1) == Fraction(7, 720)


@pytest.mark.parametrize("n", [0, -1])
def test_odd_rejects(table, params, n):
    with pytest.raises(SeriesError):
        zeta_odd(n, table, params)


def test_odd_needs_table(params):
    with pytest.raises(BernoulliError):
        zeta_odd(3, build_bernoulli_table(6), params)


def test_even(table):
    assert zeta_even(0, table) == -0.5
    assert zeta_even(1, table) == pytest.approx(pi ** 2 / 6, rel=1e-15)
    assert abs(zeta_even(3, table) - pi ** 6 / 945) <= 1e-15
    for n in range(1, 7):
        assert abs(zeta_even(n, table) - zeta_direct_oracle(2 * n)) <= 1e-13


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("alpha", ALPHAS)
def test_general(table, params, n, alpha):
    general = zeta_odd_general(n, ModularPair.from_alpha(alpha), table, params)
    assert abs(general.value - zeta_odd(n, table, params).value) <= 1e-11


def test_general_rejects(table, params):
    with pytest.raises(SeriesError):
        ModularPair(1.0, 1.0)
    with pytest.raises(SeriesError):
        ModularPair.from_alpha(-1.0)
    with pytest.raises(SeriesError):
        zeta_odd_general(0, ModularPair(pi, pi), table, params)


def test_more_terms_stay_within_estimate(table):
    coarse = zeta_odd(2, table, EvalParams(tol=1e-8, k_terms=3))
    fine = zeta_odd(2, table, EvalParams(tol=1e-13, k_terms=12))
    assert abs(coarse.value - fine.value) <= coarse.error_estimate


@pytest.mark.parametrize("n", [150, 200])
def test_odd_large_order(n):
    value = zeta_odd(n, shared_table(2 * n + 2), EvalParams(k_terms=4))
    assert value.value == pytest.approx(1.0, abs=1e-14)
    assert value.error_estimate <= 1e-12


def test_even_large_order():
    assert zeta_even(150, shared_table(300)) == pytest.approx(1.0, abs=1e-15)
