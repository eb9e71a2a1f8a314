from math import pi, tan

import pytest

from ramanujan_psi.oracles import psi_oracle
from ramanujan_psi.planner import plan
from ramanujan_psi.series import EvalParams, GuardBandError, SeriesError
from ramanujan_psi.series.psi import (cot_laurent_tail, cot_pairing, log_pairing, psi_prime_ramanujan,
                                      psi_ramanujan)

from conftest import ONE_MINUS_GAMMA


@pytest.mark.parametrize("x", [0.25, 0.5, 1.5, 2.75, 10.3, 1.0, 2.0, 3.0])
def test_against_oracle(x):
    result = psi_ramanujan(x, plan(1e-13, x))
    assert abs(result.value - psi_oracle(x)) <= 1e-11
    assert result.k_used <= 10


def test_fixed_terms():
    assert psi_ramanujan(2.5, EvalParams(k_terms=8)).value == pytest.approx(psi_oracle(2.5), abs=1e-12)


def test_one_minus_gamma():
    value = psi_ramanujan(1.0, plan(1e-13, 1.0)).value
    assert value == pytest.approx(ONE_MINUS_GAMMA, abs=5e-14)
    assert int(value * 10 ** 13) == 4227843350984


@pytest.mark.parametrize("m", [1, 2, 3])
def test_guard_continuity(m):
    params = EvalParams(k_terms=8, guard_delta=1e-3)
    centre = psi_ramanujan(float(m), params).value
    for shift in (-1.01e-3, 1.01e-3, -0.5e-3, 0.5e-3):
        assert abs(psi_ramanujan(m + shift, params).value - centre) <= 10 * 1e-3


@pytest.mark.parametrize("x", [1.0005, 1.002, 2.9991])
def test_guard_band_width_is_irrelevant(x):
    narrow = psi_ramanujan(x, EvalParams(k_terms=8, guard_delta=1e-4))
    wide = psi_ramanujan(x, EvalParams(k_terms=8, guard_delta=0.01))
    assert narrow.value == pytest.approx(wide.value, abs=1e-11)


@pytest.mark.parametrize("x", [1e-4, 0.01, 0.1])
def test_cot_laurent_tail(x):
    assert cot_laurent_tail(x) == pytest.approx(pi / tan(pi * x) - 1 / x, abs=1e-10)


@pytest.mark.parametrize("m", [1, 2, 5])
def test_pairings_finite_at_integer(m):
    assert cot_pairing(m, m) == pytest.approx(cot_pairing(m + 1e-7, m), abs=1e-6)
    assert log_pairing(m, m) == pytest.approx(log_pairing(m + 1e-7, m), abs=1e-6)


def test_rejects_non_positive():
    with pytest.raises(SeriesError):
        psi_ramanujan(-1.0, EvalParams())


def test_prime_half():
    assert psi_prime_ramanujan(0.5, plan(1e-13, 0.5)).value == pytest.approx(pi ** 2 / 2 - 4, abs=1e-10)


@pytest.mark.parametrize("x", [0.4, 1.6, 3.3])
def test_prime_matches_differences(x):
    h = 1e-5
    params = plan(1e-13, x)
    difference = (psi_ramanujan(x + h, params).value - psi_ramanujan(x - h, params).value) / (2 * h)
    assert psi_prime_ramanujan(x, params).value == pytest.approx(difference, abs=1e-7)


def test_prime_near_zero():
    assert psi_prime_ramanujan(0.01, EvalParams(k_terms=8)).value == pytest.approx(pi ** 2 / 6, abs=0.03)


def test_prime_guard_band():
    with pytest.raises(GuardBandError) as err:
        psi_prime_ramanujan(2.0001, EvalParams())
    assert err.value.nearest == 2
