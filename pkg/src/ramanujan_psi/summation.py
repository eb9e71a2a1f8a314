""" Finite sums in a fixed order """

import math

import numpy as np

EPSILON = float(np.finfo(float).eps)


def ordered_sum(terms, compensated=False):
    """
    Sum terms left to right in index order
    :param terms: sequence or array of floats
    :param compensated: use math.fsum instead of plain left-to-right addition
    :return: float
    """
    values = np.asarray(terms, dtype=float).ravel()
    if values.size == 0:
        return 0.0
    if compensated:
        return math.fsum(values)
    return float(np.cumsum(values)[-1])


def rounding_bound(terms):
    """
    Worst-case rounding error of a left-to-right sum
    :param terms: sequence or array of floats
    :return: (n + 1) * eps * sum |t|
    """
    values = np.abs(np.asarray(terms, dtype=float).ravel())
    return (values.size + 1) * EPSILON * float(np.sum(values))


def summation_error(terms):
    """
    Rounding bound for the sum of exact floats, left to right or with math.fsum

    Step i of the running sum is off by at most min(u |s_i|, |t_i|);
    u |s_n| more covers a correctly rounded total.
    :param terms: sequence or array of floats
    :return: float
    """
    values = np.asarray(terms, dtype=float).ravel()
    if values.size < 2:
        return 0.0
    u = EPSILON / 2.0
    partial = np.abs(np.cumsum(values))
    local = np.minimum(u * partial[1:], np.abs(values[1:]))
    return float(np.sum(local)) * (1.0 + 2.0 * u * values.size) + u * float(partial[-1])


def stable_expm1_ratio(scale, k):
    """
    Return 1/(e^(2 scale k) - 1) without overflow
    :param scale: positive scale
    :param k: array of positive indices
    :return: array
    """
    arg = 2.0 * scale * np.asarray(k, dtype=float)
    return np.exp(-arg) / -np.expm1(-arg)


def stable_csch2(arg):
    """
    Return 1/sinh^2(arg) for arg > 0 without overflow
    :param arg: array of positive arguments
    :return: array
    """
    arg = np.asarray(arg, dtype=float)
    return 4.0 * np.exp(-2.0 * arg) / np.expm1(-2.0 * arg) ** 2
