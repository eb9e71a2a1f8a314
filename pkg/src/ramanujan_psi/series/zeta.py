""" Zeta at even and odd integers """

import logging
from fractions import Fraction
from math import factorial, pi

import mpmath

from ramanujan_psi.bernoulli import paired_bernoulli_sum
from ramanujan_psi.planner import TailFamily, ToleranceError, terms_for_scale
from ramanujan_psi.series import ModularPair, SeriesError, SeriesValue
from ramanujan_psi.series.hyperbolic import csch2_sum, lambert_sum
from ramanujan_psi.summation import EPSILON

LOG = logging.getLogger(__name__)

SCALE_PRECISION = 80
MAX_SCALED = 1e300


def _check_order(n):
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise SeriesError("N must be a positive integer, got %r" % (n,))
    return int(n)


def zeta_even(n, table):
    """
    Return zeta(2N) = (-1)^(N+1) 2^(2N-1) pi^(2N) B_2N/(2N)!
    :param n: N >= 0
    :type table: ramanujan_psi.bernoulli.BernoulliTable
    :return: float
    """
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise SeriesError("N must be a non-negative integer, got %r" % (n,))
    n = int(n)
    table.require(2 * n)
    coefficient = (-1) ** (n + 1) * Fraction(2) ** (2 * n - 1) * table[2 * n] / factorial(2 * n)
    with mpmath.workprec(SCALE_PRECISION):
        return _scaled_float(mpmath.mpf(coefficient.numerator) / coefficient.denominator * mpmath.pi ** (2 * n),
                             "zeta(2N)")


def _scaled_float(value, what):
    """ Round an mpmath value, refusing magnitudes outside double range """
    if not abs(value) <= MAX_SCALED:
        raise ToleranceError("%s is %s, outside double precision" % (what, mpmath.nstr(value, 5)))
    return float(value)


def zeta_odd(n, table, params):
    """
    Solve the odd zeta formula for zeta(2N+1)
    :param n: N >= 1
    :type table: ramanujan_psi.bernoulli.BernoulliTable
    :type params: ramanujan_psi.series.EvalParams
    :return: SeriesValue
    """
    n = _check_order(n)
    paired = paired_bernoulli_sum(table, n)
    lambert = lambert_sum(-2 * n - 1, params)
    # (2 pi)^(2N+1) overflows a float for large N while the product stays small
    with mpmath.workprec(SCALE_PRECISION):
        main = _scaled_float(mpmath.mpf(paired.numerator) / paired.denominator
                             * (2 * mpmath.pi) ** (2 * n + 1), "(2 pi)^(2N+1) times the Bernoulli sum")

    value = main - 4.0 * n * lambert.value
    error = 4.0 * n * lambert.error_estimate
    if n % 2 == 0:
        hyperbolic = csch2_sum(params, power=-2 * n)
        value -= 2.0 * pi * hyperbolic.value
        error += 2.0 * pi * hyperbolic.error_estimate
    value /= 2.0 * n
    error = error / (2.0 * n) + 4.0 * (2 * n + 2) * EPSILON * abs(main) / (2.0 * n)
    LOG.debug("zeta(%d) = %r", 2 * n + 1, value)
    return SeriesValue(value, error, params.k_terms, 0)


def zeta_odd_general(n, pair, table, params):
    """
    Solve the modular (alpha, beta) generalisation for zeta(2N+1)

    The formula is divided through by its leading coefficient 2N alpha^-N
    before rounding, so only the weights below are formed in floats:
    2^(2N+1) alpha^N P/(2N), alpha/(2N) and (-beta)^(1-N) alpha^N/(2N).
    :param n: N >= 1
    :type pair: ramanujan_psi.series.ModularPair
    :type table: ramanujan_psi.bernoulli.BernoulliTable
    :type params: ramanujan_psi.series.EvalParams
    :return: SeriesValue
    """
    n = _check_order(n)
    if not isinstance(pair, ModularPair):
        raise SeriesError("pair must be a ModularPair: %r" % (pair,))
    table.require(2 * n + 2)
    alpha, beta = pair.alpha, pair.beta

    paired = paired_bernoulli_sum(table, n, Fraction(alpha), Fraction(beta))
    with mpmath.workprec(SCALE_PRECISION):
        big_alpha = mpmath.mpf(alpha)
        rhs = _scaled_float(mpmath.mpf(2) ** (2 * n + 1) * mpmath.mpf(paired.numerator) / paired.denominator
                            * big_alpha ** n / (2 * n), "scaled Bernoulli sum")
        beta_weight = _scaled_float((-mpmath.mpf(beta)) ** (1 - n) * big_alpha ** n / (2 * n),
                                    "beta weight")
    alpha_weight = alpha / (2.0 * n)

    alpha_terms = terms_for_scale(params.tol, TailFamily.CSCH2, alpha, -2 * n)
    beta_terms = terms_for_scale(params.tol, TailFamily.CSCH2, beta, -2 * n)
    lambert = lambert_sum(-2 * n - 1, params, scale=alpha, terms=alpha_terms)
    hyper_alpha = csch2_sum(params, power=-2 * n, scale=alpha, terms=alpha_terms)
    hyper_beta = csch2_sum(params, power=-2 * n, scale=beta, terms=beta_terms)

    value = (rhs - 2.0 * lambert.value - alpha_weight * hyper_alpha.value
             + beta_weight * hyper_beta.value)
    error = (2.0 * lambert.error_estimate + alpha_weight * hyper_alpha.error_estimate
             + abs(beta_weight) * hyper_beta.error_estimate
             + 8.0 * (n + 2) * EPSILON * (abs(rhs) + abs(beta_weight * hyper_beta.value)))
    LOG.debug("zeta(%d) from alpha=%r: %r", 2 * n + 1, alpha, value)
    return SeriesValue(value, error, max(alpha_terms, beta_terms), 0)
