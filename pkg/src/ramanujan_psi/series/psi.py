""" psi(x+1) and psi'(x+1) from the hyperbolic series """

import logging
from math import exp, expm1, floor, log, pi, sin, tan

import numpy as np

from ramanujan_psi.bernoulli import bernoulli_over_factorial, shared_table
from ramanujan_psi.planner import distance_beyond, geometric_tail
from ramanujan_psi.series import GuardBandError, SeriesError, SeriesValue, check_positive, in_guard_band
from ramanujan_psi.series.double_series import double_series_S
from ramanujan_psi.series.hyperbolic import indices, log_csch2_sum, rational_lambert_sum
from ramanujan_psi.summation import EPSILON, ordered_sum, rounding_bound, stable_csch2, stable_expm1_ratio

LOG = logging.getLogger(__name__)

LAURENT_ORDERS = 30
LAURENT_FLOOR = 1e-20


def lambert_weight(t):
    """ 1/(e^(2 pi t) - 1) """
    return float(stable_expm1_ratio(pi, t))


def csch2(t):
    """ 1/sinh^2(pi t) """
    return float(stable_csch2(pi * t))


def cot_laurent_tail(eps):
    """
    Return pi cot(pi eps) - 1/eps from the Bernoulli expansion
    :param eps: |eps| < 1/4
    :return: float
    """
    if not eps:
        return 0.0
    table = shared_table(2 * LAURENT_ORDERS)
    total = 0.0
    scaled = 2.0 * pi * eps
    power = 1.0 / eps
    for j in range(1, LAURENT_ORDERS + 1):
        power *= scaled * scaled
        term = (-1) ** j * float(bernoulli_over_factorial(table, 2 * j)) * power
        total += term
        if abs(term) < LAURENT_FLOOR:
            break
    return total


def cot_pairing(x, m):
    """
    Return pi cot(pi x)/(e^(2 pi x) - 1) + 2m/((e^(2 pi m) - 1)(m^2 - x^2)), finite at x = m
    :param x: positive real near m
    :param m: positive integer
    :return: float
    """
    eps = x - m
    weight_x = lambert_weight(x)
    ratio = expm1(2.0 * pi * eps) / eps if eps else 2.0 * pi
    return (-ratio * weight_x / -expm1(-2.0 * pi * m)
            + lambert_weight(m) / (2.0 * m + eps)
            + cot_laurent_tail(eps) * weight_x)


def log_pairing(x, m):
    """
    Return (pi/2)(log|2 sin(pi x)| csch^2(pi x) - log|m^4 - x^4| csch^2(pi m)), finite at x = m
    :param x: positive real near m
    :param m: positive integer
    :return: float
    """
    eps = x - m
    at_x = csch2(x)
    at_m = csch2(m)
    singular = log(abs(eps)) * (at_x - at_m) if eps else 0.0
    return 0.5 * pi * (singular
                       + (log(2.0 * pi) + log(float(np.sinc(eps)))) * at_x
                       - log((m + x) * (m * m + x * x)) * at_m)


def closed_part(x):
    """ (pi/3) log x + 1/(2x) - 1/(4 pi x^2) """
    return [pi / 3.0 * log(x), 0.5 / x, -0.25 / (pi * x * x)]


def psi_ramanujan(x, params):
    """
    Evaluate psi(x+1) for x > 0

    Within guard_delta of a positive integer m the cotangent and log-sine
    terms are combined with the m-th terms of the two k-sums.
    :param x: positive real
    :type params: ramanujan_psi.series.EvalParams
    :param params: truncation parameters
    :return: SeriesValue
    """
    check_positive(x)
    m = in_guard_band(x, params.guard_delta)

    if m is None:
        fraction = x - floor(x)
        singular = [pi / tan(pi * fraction) * lambert_weight(x),
                    0.5 * pi * log(abs(2.0 * sin(pi * fraction))) * csch2(x)]
    else:
        LOG.debug("x=%r inside guard band of %d", x, m)
        singular = [cot_pairing(x, m), log_pairing(x, m)]

    rational = rational_lambert_sum(x, params, exclude=m)
    logs = log_csch2_sum(x, params, exclude=m)
    s_value = double_series_S(x, params)

    parts = closed_part(x) + singular + [rational.value, -0.5 * pi * logs.value, -s_value.value]
    value = ordered_sum(parts, params.compensated)
    error = (s_value.error_estimate + rational.error_estimate + 0.5 * pi * logs.error_estimate
             + 4.0 * rounding_bound(parts))
    return SeriesValue(value, error, params.k_terms, s_value.n_used, s_value.s_used)


def _prime_tails(x, first):
    """ Tails of the two k-sums of psi' from index first """
    gap = distance_beyond(x, first)
    shrink = -expm1(-2.0 * pi * first)
    decay = exp(-2.0 * pi)
    rational = geometric_tail(
        lambda k: 4.0 * x * exp(-2.0 * pi * k) / (shrink * gap * gap * (first + x)),
        lambda k: decay, first)
    hyperbolic = geometric_tail(
        lambda k: 8.0 * pi * x ** 3 * exp(-2.0 * pi * k)
        / (shrink * shrink * gap * (first + x) * (first * first + x * x)),
        lambda k: decay, first)
    return rational + hyperbolic


def psi_prime_ramanujan(x, params):
    """
    Evaluate psi'(x+1) for x > 0 outside the guard bands
    :param x: positive real
    :type params: ramanujan_psi.series.EvalParams
    :param params: truncation parameters
    :return: SeriesValue
    """
    check_positive(x)
    m = in_guard_band(x, params.guard_delta)
    if m is not None:
        raise GuardBandError(x, m, params.guard_delta)

    fraction = x - floor(x)
    k = indices(params.k_terms)
    rational = 4.0 * k * x * stable_expm1_ratio(pi, k) / ((k - x) * (k + x)) ** 2
    hyperbolic = 2.0 * pi * x ** 3 * stable_csch2(pi * k) / ((k - x) * (k + x) * (k * k + x * x))

    parts = [pi / (3.0 * x), -0.5 / (x * x), 0.5 / (pi * x ** 3),
             -pi * pi / sin(pi * fraction) ** 2 * lambert_weight(x),
             ordered_sum(rational, params.compensated), ordered_sum(hyperbolic, params.compensated)]
    value = ordered_sum(parts, params.compensated)
    if not np.isfinite(value):
        raise SeriesError("psi' overflowed at x=%r" % (x,))
    error = (_prime_tails(x, params.k_terms + 1) + 4.0 * rounding_bound(parts)
             + rounding_bound(rational) + rounding_bound(hyperbolic) + EPSILON * abs(value))
    return SeriesValue(value, error, params.k_terms, 0)
