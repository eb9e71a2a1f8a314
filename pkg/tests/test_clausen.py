from fractions import Fraction
from math import fsum, pi

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ramanujan_psi.series.clausen import (HEAD_TERMS, clausen_values, head_magnitudes, inner_numerators,
                                          phase_error, split_error)
from ramanujan_psi.summation import ordered_sum, summation_error

FLOATS = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)


def test_clausen_quarter():
    cl2, cl4, cl3, cl5 = clausen_values(0.25)
    # Cl_2(pi/2) is Catalan's constant
    assert cl2 == pytest.approx(float(mpmath.catalan), abs=5e-16)
    assert cl4 == pytest.approx(float(mpmath.nsum(lambda n: (-1) ** n / (2 * n + 1) ** 4, [0, mpmath.inf])),
                                abs=5e-16)
    # cos(n pi/2)/n^s leaves -2^-s eta(s) on the even n
    assert cl3 == pytest.approx(-float(mpmath.altzeta(3)) / 8, abs=5e-16)
    assert cl5 == pytest.approx(-float(mpmath.altzeta(5)) / 32, abs=5e-16)


@pytest.mark.parametrize("fraction", [0.1, 0.3, 0.77])
def test_head_phases_correctly_rounded(fraction):
    sines, cosines = inner_numerators(fraction, HEAD_TERMS + 10)
    with mpmath.workprec(200):
        f = mpmath.mpf(fraction)
        for n in (1, 7, HEAD_TERMS):
            assert sines[n - 1] == float(mpmath.sinpi(2 * n * f)) / n ** 4
            assert cosines[n - 1] == float(mpmath.cospi(2 * n * f)) / n ** 5


def test_numerators_beyond_head():
    fraction = 0.3
    sines, cosines = inner_numerators(fraction, 2000)
    n = 1999
    assert sines[n - 1] * n ** 4 == pytest.approx(float(mpmath.sinpi(2 * n * mpmath.mpf(fraction))),
                                                  abs=2 * pi * (n + 2) * 2.3e-16)
    assert cosines[n - 1] * n ** 5 == pytest.approx(float(mpmath.cospi(2 * n * mpmath.mpf(fraction))),
                                                    abs=2 * pi * (n + 2) * 2.3e-16)


def test_head_magnitudes_bound_sums():
    abs_sin, abs_cos = head_magnitudes(0.3)
    sines, cosines = inner_numerators(0.3, 5000)
    assert float(np.sum(np.abs(sines))) <= abs_sin
    assert float(np.sum(np.abs(cosines))) <= abs_cos


def test_phase_error_shrinks_with_k():
    assert phase_error(100, 4) < phase_error(1, 4)
    assert phase_error(1, 5) < phase_error(1, 4)


@pytest.mark.parametrize("fraction", [0.1, 0.3])
@pytest.mark.parametrize("k", [1, 10, 60])
def test_split_error_covers_exact_combination(fraction, k):
    n_terms = 400
    cl2, cl4, _, _ = clausen_values(fraction)
    sines, _ = inner_numerators(fraction, n_terms)
    squares = np.arange(1, n_terms + 1, dtype=float) ** 2
    parts = sines / (squares + k * k)
    rest = fsum(parts)
    combined = cl2 - k * k * cl4 + float(k) ** 4 * rest

    with mpmath.workprec(200):
        f = mpmath.mpf(fraction)
        theta = 2 * mpmath.pi * f
        exact_rest = mpmath.fsum(mpmath.sinpi(2 * n * f) / (mpmath.mpf(n) ** 4 * (n * n + k * k))
                                 for n in range(1, n_terms + 1))
        exact = mpmath.clsin(2, theta) - k * k * mpmath.clsin(4, theta) + mpmath.mpf(k) ** 4 * exact_rest

    bound = split_error(k, cl2, cl4, rest, float(np.sum(np.abs(parts))), 4, combined)
    assert abs(combined - float(exact)) <= bound + 1e-300


@settings(max_examples=60, deadline=None)
@given(st.lists(FLOATS, min_size=2, max_size=60))
def test_summation_error_is_a_bound(terms):
    exact = sum(Fraction(term) for term in terms)
    bound = Fraction(summation_error(terms))
    assert abs(Fraction(ordered_sum(terms)) - exact) <= bound
    assert abs(Fraction(fsum(terms)) - exact) <= bound


def test_summation_error_exact_sums():
    assert summation_error([1.0, 2.0]) == pytest.approx(3 * 2.220446049250313e-16, rel=1e-12)
    assert summation_error([1.0]) == 0.0
