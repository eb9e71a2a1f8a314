from math import pi

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from ramanujan_psi.oracles import (OracleConfig, OracleError, OracleToleranceError, classical_psi,
                                   euler_gamma_oracle, im_psi_one_plus_ix, maclaurin_truncation_bound,
                                   psi_maclaurin_oracle, psi_oracle, psi_shifted_oracle, re_psi_one_plus_ik,
                                   zeta_bracket, zeta_direct_oracle)
from ramanujan_psi.oracles.summation import harmonic_kernel_sum

from conftest import GAMMA, ZETA3, ZETA5


def test_psi_at_one():
    assert psi_oracle(1.0) == pytest.approx(1.0 - GAMMA, abs=1e-15)


def test_psi_half():
    # psi(3/2) = 2 - gamma - 2 log 2
    assert psi_oracle(0.5) == pytest.approx(2.0 - GAMMA - 2.0 * float(mpmath.log(2)), abs=1e-15)


def test_gamma_from_oracle():
    assert euler_gamma_oracle() == pytest.approx(GAMMA, abs=1e-15)


@settings(max_examples=50, deadline=None)
@given(st.floats(min_value=0.01, max_value=50.0))
def test_psi_recurrence(x):
    assert psi_oracle(x + 1.0) - psi_oracle(x) == pytest.approx(1.0 / (x + 1.0), abs=1e-14)


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=0.01, max_value=1e4))
def test_psi_against_mpmath(x):
    assert psi_oracle(x) == pytest.approx(float(mpmath.digamma(x + 1)), abs=2e-14, rel=1e-15)


@pytest.mark.parametrize("x", [0.0, -1.0, float("nan")])
def test_psi_rejects(x):
    with pytest.raises(OracleError):
        psi_oracle(x)


def test_psi_explicit_failure():
    # a single asymptotic term cannot reach 1e-15 at the shift threshold
    with pytest.raises(OracleToleranceError):
        psi_oracle(1.0, OracleConfig(max_terms=1))


def test_zeta_known_values():
    assert zeta_direct_oracle(2) == pytest.approx(pi ** 2 / 6, abs=1e-15)
    assert zeta_direct_oracle(3) == pytest.approx(ZETA3, abs=1e-15)
    assert zeta_direct_oracle(5) == pytest.approx(ZETA5, abs=1e-15)


@pytest.mark.parametrize("terms", [1, 10, 1000])
@pytest.mark.parametrize("s", [1.5, 2.5, 3.0, 7.0, 11.0])
def test_zeta_inside_bracket(s, terms):
    lower, upper = zeta_bracket(s, terms)
    assert lower <= float(mpmath.zeta(s)) <= upper


def test_zeta_bracket_is_tight():
    lower, upper = zeta_bracket(7.0, 1000)
    assert upper - lower <= 1e-14
    assert lower <= zeta_direct_oracle(7.0) + 1e-15


@pytest.mark.parametrize("s", [1.0, 0.5])
def test_zeta_rejects(s):
    with pytest.raises(OracleError):
        zeta_direct_oracle(s)


@pytest.mark.parametrize("x", [0.3, -0.3, 0.5])
def test_maclaurin_matches_psi(x):
    terms = 80
    assert maclaurin_truncation_bound(x, terms) < 1e-14
    assert psi_maclaurin_oracle(x, terms) == pytest.approx(psi_shifted_oracle(x), abs=1e-13)


def test_maclaurin_rejects():
    with pytest.raises(OracleError):
        psi_maclaurin_oracle(1.0, 10)


@pytest.mark.parametrize("k", [0.5, 1.0, 3.0, 40.0])
def test_re_psi_against_mpmath(k):
    assert re_psi_one_plus_ik(k) == pytest.approx(float(mpmath.re(mpmath.digamma(1 + 1j * k))), abs=1e-14)


def test_kernel_vanishes_at_zero():
    assert harmonic_kernel_sum(0) == 0.0
    assert harmonic_kernel_sum(1e-8) == pytest.approx(1.2020569031595942e-16, abs=1e-19)


@pytest.mark.parametrize("x", [0.001, 0.2, 1.0, 6.0])
def test_im_psi(x):
    assert im_psi_one_plus_ix(x) == pytest.approx(float(mpmath.im(mpmath.digamma(1 + 1j * x))), abs=1e-14)


def test_im_psi_rejects():
    with pytest.raises(OracleError):
        im_psi_one_plus_ix(0.0)


def test_classical_baseline():
    result = classical_psi(2.5, 1e-6)
    assert abs(result.terms - 2500000) <= 1
    assert not result.capped
    assert abs(result.value - psi_oracle(2.5)) <= 1.001 * result.tail_bound


def test_classical_baseline_cap():
    result = classical_psi(2.5, 1e-12, cap=1000)
    assert result.capped
    assert result.terms == 1000
    assert result.tail_bound == pytest.approx(2.5e-3)
