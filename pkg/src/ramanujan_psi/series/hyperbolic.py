""" k-indexed hyperbolic and Lambert series """

import logging
from math import pi

import numpy as np

from ramanujan_psi.planner import TailFamily, tail_bound
from ramanujan_psi.series import SeriesValue
from ramanujan_psi.summation import ordered_sum, rounding_bound, stable_csch2, stable_expm1_ratio

LOG = logging.getLogger(__name__)


def indices(count, exclude=None):
    """
    Return 1..count as floats, without exclude
    :param count: last index
    :param exclude: index to drop
    :return: numpy array
    """
    k = np.arange(1, count + 1, dtype=float)
    if exclude is not None:
        k = k[k != exclude]
    return k


def _finish(terms, tail, params, count):
    """ Sum terms and attach tail plus rounding """
    return SeriesValue(ordered_sum(terms, params.compensated), tail + rounding_bound(terms), count, 0)


def csch2_sum(params, power=0, scale=pi, terms=None):
    """
    Return sum_{k=1}^{K} k^power / sinh^2(scale k)
    :type params: ramanujan_psi.series.EvalParams
    :param params: truncation parameters
    :param power: k exponent
    :param scale: hyperbolic scale
    :param terms: K, params.k_terms when None
    :return: SeriesValue
    """
    count = params.k_terms if terms is None else terms
    k = indices(count)
    values = k ** power * stable_csch2(scale * k)
    tail = tail_bound(TailFamily.CSCH2, count + 1, power=power, scale=scale).bound
    return _finish(values, tail, params, count)


def lambert_sum(power, params, scale=pi, terms=None):
    """
    Return sum_{k=1}^{K} k^power / (e^(2 scale k) - 1)
    :param power: any integer
    :type params: ramanujan_psi.series.EvalParams
    :param params: truncation parameters
    :param scale: exponential scale
    :param terms: K, params.k_terms when None
    :return: SeriesValue
    """
    count = params.k_terms if terms is None else terms
    k = indices(count)
    values = k ** power * stable_expm1_ratio(scale, k)
    tail = tail_bound(TailFamily.LAMBERT, count + 1, power=power, scale=scale).bound
    return _finish(values, tail, params, count)


def rational_lambert_sum(x, params, exclude=None):
    """
    Return sum_k 2k / ((e^(2 pi k) - 1)(k^2 - x^2)), k != exclude
    :param x: positive real
    :type params: ramanujan_psi.series.EvalParams
    :param exclude: index paired with the cotangent term
    :return: SeriesValue
    """
    k = indices(params.k_terms, exclude)
    values = 2.0 * k * stable_expm1_ratio(pi, k) / ((k - x) * (k + x))
    tail = tail_bound(TailFamily.RATIONAL, params.k_terms + 1, x, exclude=exclude).bound
    return _finish(values, tail, params, params.k_terms)


def shifted_lambert_sum(x, params):
    """
    Return sum_k 2k / ((e^(2 pi k) - 1)(k^2 + x^2))
    :param x: positive real
    :type params: ramanujan_psi.series.EvalParams
    :return: SeriesValue
    """
    k = indices(params.k_terms)
    values = 2.0 * k * stable_expm1_ratio(pi, k) / (k * k + x * x)
    # each term is at most 2/(k (e^(2 pi k) - 1))
    tail = 2.0 * tail_bound(TailFamily.LAMBERT, params.k_terms + 1, power=-1).bound
    return _finish(values, tail, params, params.k_terms)


def log_csch2_sum(x, params, exclude=None):
    """
    Return sum_k log|k^4 - x^4| / sinh^2(pi k), k != exclude
    :param x: positive real
    :type params: ramanujan_psi.series.EvalParams
    :param exclude: index paired with the log-sine term
    :return: SeriesValue
    """
    k = indices(params.k_terms, exclude)
    # |k^4 - x^4| = |k - x| (k + x)(k^2 + x^2) keeps digits near k = x
    logs = np.log(np.abs(k - x)) + np.log(k + x) + np.log(k * k + x * x)
    values = logs * stable_csch2(pi * k)
    tail = tail_bound(TailFamily.LOG_CSCH2, params.k_terms + 1, x, exclude=exclude).bound
    return _finish(values, tail, params, params.k_terms)
