""" Euler's constant and Re psi(1+ix) """

import logging
from fractions import Fraction
from math import floor, log, pi, sin

from ramanujan_psi.oracles import euler_gamma_oracle
from ramanujan_psi.oracles.summation import harmonic_kernel_sum
from ramanujan_psi.series import (GAMMA_CONSISTENCY, ConsistencyError, EulerGamma, GammaSource,
                                  GuardBandError, SeriesError, SeriesValue, check_positive,
                                  in_guard_band)
from ramanujan_psi.series.double_series import double_series_S
from ramanujan_psi.series.hyperbolic import log_csch2_sum, rational_lambert_sum, shifted_lambert_sum
from ramanujan_psi.series.psi import csch2, lambert_weight
from ramanujan_psi.summation import EPSILON, ordered_sum, rounding_bound

LOG = logging.getLogger(__name__)


def harmonic_number(m):
    """
    Return sum_{j=1}^{m} 1/j, rounded once
    :param m: positive integer
    :return: float
    """
    return float(sum(Fraction(1, j) for j in range(1, m + 1)))


def _checked(value, source, error, limit_value):
    """ Cross-check a gamma estimate against the oracle """
    reference = euler_gamma_oracle()
    if abs(value - reference) > GAMMA_CONSISTENCY:
        raise ConsistencyError("gamma estimate %r is %.3g away from %r"
                               % (value, abs(value - reference), reference))
    return EulerGamma(value, source, error, limit_value)


def integer_limit_rhs(m, params):
    """
    Return H_m - gamma from the integer limit of the psi formula
    :param m: positive integer
    :type params: ramanujan_psi.series.EvalParams
    :return: SeriesValue
    """
    rational = rational_lambert_sum(m, params, exclude=m)
    logs = log_csch2_sum(m, params, exclude=m)
    s_value = double_series_S(float(m), params)

    parts = [pi / 3.0 * log(m), 0.5 / m, -0.25 / (pi * m * m),
             rational.value,
             0.5 * pi * (log(pi) - log(2.0 * m ** 3) - 1.0) * csch2(m),
             -0.5 * pi * logs.value,
             lambert_weight(m) / (2.0 * m),
             -s_value.value]
    value = ordered_sum(parts, params.compensated)
    error = (rational.error_estimate + 0.5 * pi * logs.error_estimate + s_value.error_estimate
             + 4.0 * rounding_bound(parts))
    return SeriesValue(value, error, params.k_terms, 0, s_value.s_used)


def gamma_at_integer(m, params):
    """
    Euler's constant from the limit x -> m of the psi formula
    :param m: positive integer
    :type params: ramanujan_psi.series.EvalParams
    :return: EulerGamma
    """
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise SeriesError("m must be a positive integer, got %r" % (m,))
    m = int(m)
    rhs = integer_limit_rhs(m, params)
    value = harmonic_number(m) - rhs.value
    LOG.debug("gamma from m=%d: %r (H_m - gamma = %r)", m, value, rhs.value)
    return _checked(value, GammaSource.INTEGER_LIMIT, rhs.error_estimate + EPSILON * m, rhs.value)


def re_psi_complex_ramanujan(x, params):
    """
    Evaluate Re psi(1+ix) from the hyperbolic series
    :param x: positive real outside the guard bands
    :type params: ramanujan_psi.series.EvalParams
    :return: SeriesValue
    """
    check_positive(x)
    m = in_guard_band(x, params.guard_delta)
    if m is not None:
        raise GuardBandError(x, m, params.guard_delta)

    fraction = x - floor(x)
    shifted = shifted_lambert_sum(x, params)
    logs = log_csch2_sum(x, params)
    s_value = double_series_S(x, params)

    parts = [pi / 3.0 * log(x), 0.25 / (pi * x * x),
             0.5 * pi * log(abs(2.0 * sin(pi * fraction))) * csch2(x),
             shifted.value, -0.5 * pi * logs.value, -s_value.value]
    value = ordered_sum(parts, params.compensated)
    error = (shifted.error_estimate + 0.5 * pi * logs.error_estimate + s_value.error_estimate
             + 4.0 * rounding_bound(parts))
    return SeriesValue(value, error, params.k_terms, s_value.n_used, s_value.s_used)


def gamma_any_x(x, params):
    """
    Euler's constant from the formula valid for every x > 0

    gamma = sum_k x^2/(k(k^2+x^2)) - Re psi(1+ix); the kernel sum is taken
    from the classical side.
    :param x: positive real outside the guard bands
    :type params: ramanujan_psi.series.EvalParams
    :return: EulerGamma
    """
    re_psi = re_psi_complex_ramanujan(x, params)
    kernel = harmonic_kernel_sum(x)
    value = kernel - re_psi.value
    error = re_psi.error_estimate + 4.0 * EPSILON * (abs(kernel) + abs(re_psi.value))
    return _checked(value, GammaSource.ANY_X, error, re_psi.value)
