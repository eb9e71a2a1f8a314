""" Closed-form identities and residual checks """

import logging
from math import exp, expm1, floor, log, pi, tan

from ramanujan_psi.bernoulli import bernoulli_over_factorial, paired_bernoulli_sum
from ramanujan_psi.oracles import psi_oracle, zeta_direct_oracle
from ramanujan_psi.oracles.quadrature import lambert_integral_oracle
from ramanujan_psi.oracles.summation import harmonic_kernel_sum
from ramanujan_psi.planner import distance_beyond, geometric_tail
from ramanujan_psi.series import GuardBandError, SeriesError, SeriesValue, check_positive, in_guard_band
from ramanujan_psi.series.hyperbolic import csch2_sum, indices, lambert_sum, log_csch2_sum
from ramanujan_psi.series.psi import lambert_weight, psi_prime_ramanujan
from ramanujan_psi.summation import EPSILON, ordered_sum, rounding_bound, stable_csch2, stable_expm1_ratio

LOG = logging.getLogger(__name__)

CSCH2_TARGET = 1.0 / 6.0 - 1.0 / (2.0 * pi)
LAMBERT_TARGET = 1.0 / 24.0 - 1.0 / (8.0 * pi)
QUADRATURE_AGREEMENT = 1e-10
RICHARDSON_START = 0.1
RICHARDSON_LEVELS = 5
# power series checks stay inside this radius, cut after EXPANSION_TERMS powers
EXPANSION_RADIUS = 0.5
EXPANSION_TERMS = 60


def csch2_identity_residual(params):
    """
    Return sum 1/sinh^2(pi k) - (1/6 - 1/(2 pi))
    :type params: ramanujan_psi.series.EvalParams
    :return: SeriesValue
    """
    partial = csch2_sum(params)
    return SeriesValue(partial.value - CSCH2_TARGET, partial.error_estimate, partial.k_used, 0)


def lambert_linear_residual(params):
    """
    Return sum k/(e^(2 pi k) - 1) - (1/24 - 1/(8 pi))
    :type params: ramanujan_psi.series.EvalParams
    :return: SeriesValue
    """
    partial = lambert_sum(1, params)
    return SeriesValue(partial.value - LAMBERT_TARGET, partial.error_estimate, partial.k_used, 0)


def lambert_identity_residual(m, table, params):
    """
    Return sum k^(2m-1)/(e^(2 pi k) - 1) - B_2m/(4m) for odd m > 1

    The integral of v^(2m-1)/(e^(2 pi v) - 1) over (0, inf) is checked
    against the same rational.
    :param m: odd integer > 1
    :type table: ramanujan_psi.bernoulli.BernoulliTable
    :type params: ramanujan_psi.series.EvalParams
    :return: float
    """
    if isinstance(m, bool) or int(m) != m or m <= 1 or m % 2 == 0:
        raise SeriesError("m must be an odd integer > 1, got %r" % (m,))
    m = int(m)
    table.require(2 * m)
    exact = float(table[2 * m] / (4 * m))

    integral = lambert_integral_oracle(2 * m - 1)
    if abs(integral - exact) > QUADRATURE_AGREEMENT:
        raise SeriesError("integral %r disagrees with B_%d/%d = %r" % (integral, 2 * m, 4 * m, exact))

    partial = lambert_sum(2 * m - 1, params)
    residual = partial.value - exact
    if abs(residual) > partial.error_estimate + params.tol:
        raise SeriesError("Lambert identity for m=%d off by %.3g" % (m, residual))
    return residual


def zeta_odd_limit_residual(table, params):
    """
    Return 1 + 2 pi sum 1/sinh^2(pi k) - 2 pi * (paired Bernoulli sum at N = 0)
    :type table: ramanujan_psi.bernoulli.BernoulliTable
    :type params: ramanujan_psi.series.EvalParams
    :return: SeriesValue
    """
    partial = csch2_sum(params)
    paired = float(paired_bernoulli_sum(table, 0))
    value = 1.0 + 2.0 * pi * partial.value - 2.0 * pi * paired
    return SeriesValue(value, 2.0 * pi * partial.error_estimate + 4.0 * EPSILON, partial.k_used, 0)


def coefficient_identity_residual(params):
    """
    Return 1 - pi/3 + 2 pi sum 1/sinh^2(pi k)
    :type params: ramanujan_psi.series.EvalParams
    :return: SeriesValue
    """
    partial = csch2_sum(params)
    parts = [1.0, -pi / 3.0, 2.0 * pi * partial.value]
    return SeriesValue(ordered_sum(parts), 2.0 * pi * partial.error_estimate + rounding_bound(parts),
                       partial.k_used, 0)


def asymptotic_residual(x, params):
    """
    Return psi(x+1) - (pi/3) log x + (pi/2) sum_k log|x^4 - k^4|/sinh^2(pi k) at x = N + 1/2
    :param x: N + 1/2 with N a positive integer
    :type params: ramanujan_psi.series.EvalParams
    :return: float
    """
    whole = floor(x)
    if whole < 1 or abs(x - whole - 0.5) > 1e-12:
        raise SeriesError("x must be N + 1/2 for a positive integer N, got %r" % (x,))

    logs = log_csch2_sum(x, params)
    return psi_oracle(x) - pi / 3.0 * log(x) + 0.5 * pi * logs.value


def partial_fraction_psi_plus_gamma(x, params):
    """
    Evaluate psi(1+x) + gamma from its partial fraction form

    1/(2x) - 1/(2 pi x^2) + pi cot(pi x)/(e^(2 pi x) - 1) + sum_k x^2/(k(k^2+x^2))
    + sum_k 4 k x^2/((e^(2 pi k) - 1)(k^4 - x^4))
    :param x: positive real outside the guard bands
    :type params: ramanujan_psi.series.EvalParams
    :return: SeriesValue
    """
    check_positive(x)
    m = in_guard_band(x, params.guard_delta)
    if m is not None:
        raise GuardBandError(x, m, params.guard_delta)

    k = indices(params.k_terms)
    quartic = (k - x) * (k + x) * (k * k + x * x)
    rational = 4.0 * k * x * x * stable_expm1_ratio(pi, k) / quartic

    fraction = x - floor(x)
    kernel = harmonic_kernel_sum(x)
    parts = [0.5 / x, -0.5 / (pi * x * x), pi / tan(pi * fraction) * lambert_weight(x),
             kernel, ordered_sum(rational, params.compensated)]
    value = ordered_sum(parts, params.compensated)

    first = params.k_terms + 1
    gap = distance_beyond(x, first)
    tail = geometric_tail(
        lambda j: 4.0 * x * x * exp(-2.0 * pi * j) / (-expm1(-2.0 * pi * first) * gap * (first * first + x * x)),
        lambda j: exp(-2.0 * pi), first)
    error = tail + 4.0 * rounding_bound(parts) + rounding_bound(rational)
    return SeriesValue(value, error, params.k_terms, 0)


def maclaurin_slope(params):
    """
    Extract the x^1 coefficient of psi'(1+x) by Richardson extrapolation

    D(h) = (psi'(1+h) - zeta(2))/h is tabulated at h = 0.1/2^i; the
    coefficient equals -2 zeta(3).
    :type params: ramanujan_psi.series.EvalParams
    :return: float
    """
    zeta2 = pi * pi / 6.0
    table = []
    for i in range(RICHARDSON_LEVELS):
        h = RICHARDSON_START / 2 ** i
        row = [(psi_prime_ramanujan(h, params).value - zeta2) / h]
        for j in range(1, i + 1):
            row.append((2 ** j * row[j - 1] - table[i - 1][j - 1]) / (2 ** j - 1))
        table.append(row)
    return table[-1][-1]


def _check_expansion_point(x):
    if not 0 < x <= EXPANSION_RADIUS:
        raise SeriesError("expansion checks need 0 < x <= %g, got %r" % (EXPANSION_RADIUS, x))


def lambert_expansion_residual(x, params):
    """
    Compare sum_k 4kx/((e^(2 pi k) - 1)(k^2 - x^2)^2) with its power series

    The series is 4 sum_n n x^(2n-1) L(2n+1), L(s) = sum_k k^-s/(e^(2 pi k) - 1),
    cut after EXPANSION_TERMS powers.
    :param x: 0 < x <= EXPANSION_RADIUS
    :type params: ramanujan_psi.series.EvalParams
    :return: SeriesValue, value is the residual
    """
    _check_expansion_point(x)
    k = indices(params.k_terms)
    closed = ordered_sum(4.0 * k * x * stable_expm1_ratio(pi, k) / ((k - x) * (k + x)) ** 2)
    powers = [4.0 * n * x ** (2 * n - 1) * lambert_sum(-2 * n - 1, params).value
              for n in range(1, EXPANSION_TERMS + 1)]
    value = closed - ordered_sum(powers)

    # dropped powers, weighted by L(3)
    big_n = EXPANSION_TERMS + 1
    dropped = 4.0 * lambert_sum(-3, params).value * big_n * x ** (2 * big_n - 1) / (1.0 - x * x) ** 2
    return SeriesValue(value, dropped + 8.0 * EPSILON * abs(closed), params.k_terms, 0)


def csch2_expansion_residual(x, params):
    """
    Compare sum_k 2 pi x^3/(sinh^2(pi k)(k^4 - x^4)) with 2 pi sum_n x^(4n-1) sum_k k^-4n/sinh^2(pi k)
    :param x: 0 < x <= EXPANSION_RADIUS
    :type params: ramanujan_psi.series.EvalParams
    :return: SeriesValue, value is the residual
    """
    _check_expansion_point(x)
    k = indices(params.k_terms)
    closed = ordered_sum(2.0 * pi * x ** 3 * stable_csch2(pi * k) / ((k * k - x * x) * (k * k + x * x)))
    powers = [2.0 * pi * x ** (4 * n - 1) * csch2_sum(params, power=-4 * n).value
              for n in range(1, EXPANSION_TERMS + 1)]
    value = closed - ordered_sum(powers)

    big_n = EXPANSION_TERMS + 1
    dropped = 2.0 * pi * csch2_sum(params, power=-4).value * x ** (4 * big_n - 1) / (1.0 - x ** 4)
    return SeriesValue(value, dropped + 8.0 * EPSILON * abs(closed), params.k_terms, 0)


def even_coefficient_residual(n, table):
    """
    Return (2N+1) zeta(2N+2) minus the x^(2N) coefficient of the expanded psi' formula

    Only the B_1 cross term reaches the even powers, leaving
    (-1)^N (2 pi)^(2N+2) (2N+1) B_(2N+2)/(2 (2N+2)!).
    :param n: N >= 0
    :type table: ramanujan_psi.bernoulli.BernoulliTable
    :return: float
    """
    if n < 0:
        raise SeriesError("N must be >= 0, got %r" % (n,))
    coefficient = -(-1) ** n * (2 * n + 1) * bernoulli_over_factorial(table, 2 * n + 2) * table[1]
    series = float(coefficient) * (2.0 * pi) ** (2 * n + 2)
    return (2 * n + 1) * zeta_direct_oracle(2 * n + 2) - series


def psi_prime_maclaurin_residual(x, params):
    """
    Return psi'(1+x) minus sum_n (-x)^(n-1) n zeta(n+1)
    :param x: 0 < x <= EXPANSION_RADIUS
    :type params: ramanujan_psi.series.EvalParams
    :return: float
    """
    _check_expansion_point(x)
    powers = [(-x) ** (n - 1) * n * zeta_direct_oracle(n + 1) for n in range(1, 2 * EXPANSION_TERMS + 1)]
    return psi_prime_ramanujan(x, params).value - ordered_sum(powers)
