""" The double series S(x) = 2 pi sum_k e^(-2 pi k x) (k^2 A_k - k^3 C_k)

A_k = sum_n sin(2 pi n x)/(n^2 + k^2) and C_k = sum_n cos(2 pi n x)/(n (n^2 + k^2)).
Both inner sums are split as

    1/(n^2 + k^2)     = 1/n^2 - k^2/n^4 + k^4/(n^4 (n^2 + k^2))
    1/(n (n^2 + k^2)) = 1/n^3 - k^2/n^5 + k^4/(n^5 (n^2 + k^2))

so that the Clausen sums carry the slowly converging part in closed form and
the remainders decay like n^-6 and n^-7 for every x. The remainders are
always summed with math.fsum: the k^4 factor amplifies their rounding.
"""

import logging
from math import exp, floor, fsum, pi

import numpy as np

from ramanujan_psi.oracles.summation import harmonic_kernel_sum
from ramanujan_psi.planner import TailFamily, tail_bound
from ramanujan_psi.series import SeriesValue, check_positive
from ramanujan_psi.series.clausen import (UNIT_ROUNDOFF, clausen_values, inner_numerators, split_error,
                                          term_error)
from ramanujan_psi.summation import ordered_sum, rounding_bound, summation_error

LOG = logging.getLogger(__name__)


def double_series_S(x, params):
    """
    Evaluate S(x) with params.outer_terms(x) outer and params.n_terms inner terms
    :param x: positive real
    :type params: ramanujan_psi.series.EvalParams
    :param params: truncation parameters
    :return: SeriesValue
    """
    check_positive(x)
    outer = params.outer_terms(x)
    if x == floor(x):
        return _at_integer(x, outer, params)

    fraction = x - floor(x)
    cl2, cl4, cl3, cl5 = clausen_values(fraction)
    sines, cosines = inner_numerators(fraction, params.n_terms)
    squares = np.arange(1, params.n_terms + 1, dtype=float) ** 2

    terms = []
    inner_error = 0.0
    rounding = 0.0
    big_n = float(params.n_terms)
    for k in range(1, outer + 1):
        k2 = float(k * k)
        k4 = k2 * k2
        weight = exp(-2.0 * pi * k * x)
        parts_sin = sines / (squares + k2)
        parts_cos = cosines / (squares + k2)
        rest_sin = fsum(parts_sin)
        rest_cos = fsum(parts_cos)
        a_k = cl2 - k2 * cl4 + k4 * rest_sin
        c_k = cl3 - k2 * cl5 + k4 * rest_cos
        terms.append(weight * (k2 * a_k - k2 * k * c_k))

        inner_error += weight * (k2 * k4 / (5.0 * big_n ** 5) + k2 * k * k4 / (6.0 * big_n ** 6))
        a_error = split_error(k, cl2, cl4, rest_sin, float(np.sum(np.abs(parts_sin))), 4, a_k)
        c_error = split_error(k, cl3, cl5, rest_cos, float(np.sum(np.abs(parts_cos))), 5, c_k)
        rounding += term_error(k, x, a_k, c_k, a_error, c_error)

    total = ordered_sum(terms, params.compensated)
    value = 2.0 * pi * total
    error = (tail_bound(TailFamily.EXP_ENVELOPE, outer + 1, x).bound
             + 2.0 * pi * (inner_error + rounding + summation_error(terms))
             + 2.0 * UNIT_ROUNDOFF * abs(value))
    LOG.debug("S(%r) = %r with %d outer and %d inner terms, rounding bound %.3g",
              x, value, outer, params.n_terms, 2.0 * pi * rounding)
    return SeriesValue(value, error, outer, params.n_terms, outer)


def _at_integer(m, outer, params):
    """ S(m) = -2 pi sum_k k e^(-2 pi k m) H(k), H the harmonic kernel """
    terms = [k * exp(-2.0 * pi * k * m) * harmonic_kernel_sum(k) for k in range(1, outer + 1)]
    value = -2.0 * pi * ordered_sum(terms, params.compensated)
    error = tail_bound(TailFamily.EXP_ENVELOPE, outer + 1, m).bound + 2.0 * pi * rounding_bound(terms)
    return SeriesValue(value, error, outer, 0, outer)
