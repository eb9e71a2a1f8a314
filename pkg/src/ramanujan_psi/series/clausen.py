""" Clausen sums and the rounding of the split inner sums of S(x)

The inner sums of the double series are evaluated as Clausen values plus
k^4 times a fast remainder. Both pieces are exact to a few ulps, but the
combination cancels like k^4 and k^5, so every evaluation carries an
explicit rounding bound built here.
"""

import logging
from math import pi

import mpmath
import numpy as np

from ramanujan_psi.summation import EPSILON

LOG = logging.getLogger(__name__)

CLAUSEN_PRECISION = 96
# phases of the first HEAD_TERMS inner terms are taken from mpmath
HEAD_TERMS = 64
UNIT_ROUNDOFF = EPSILON / 2.0

# integral bounds of sum_{n>HEAD_TERMS} (n+2)/n^p for p = 4..7
_PHASE_TAIL = {
    power: (HEAD_TERMS ** (2 - power) / (power - 2) + 2.0 * HEAD_TERMS ** (1 - power) / (power - 1))
    for power in (4, 5, 6, 7)
}


def clausen_values(fraction):
    """
    Return (Cl_2, Cl_4, Cl_3, Cl_5) at 2 pi * fraction

    Cl_2, Cl_4 are the sine sums sum sin(n t)/n^s, Cl_3, Cl_5 the cosine sums.
    :param fraction: fractional part of x
    :return: tuple of floats
    """
    with mpmath.workprec(CLAUSEN_PRECISION):
        theta = 2 * mpmath.pi * mpmath.mpf(fraction)
        return (float(mpmath.clsin(2, theta)), float(mpmath.clsin(4, theta)),
                float(mpmath.clcos(3, theta)), float(mpmath.clcos(5, theta)))


def inner_numerators(fraction, n_terms):
    """
    Return (sin(2 pi n f)/n^4, cos(2 pi n f)/n^5) for n = 1..n_terms

    The first HEAD_TERMS phases are correctly rounded; beyond them the
    reduced phase loses up to 2 pi (n + 2) ulps.
    :param fraction: fractional part of x
    :param n_terms: number of inner terms
    :return: tuple of arrays
    """
    n = np.arange(1, n_terms + 1, dtype=float)
    phase = 2.0 * pi * np.mod(n * fraction, 1.0)
    sines = np.sin(phase)
    cosines = np.cos(phase)

    head = min(HEAD_TERMS, n_terms)
    with mpmath.workprec(CLAUSEN_PRECISION):
        f = mpmath.mpf(fraction)
        for index in range(head):
            sines[index] = float(mpmath.sinpi(2 * (index + 1) * f))
            cosines[index] = float(mpmath.cospi(2 * (index + 1) * f))
    return sines / n ** 4, cosines / n ** 5


def head_magnitudes(fraction):
    """
    Return bounds for sum |sin(2 pi n f)|/n^4 and sum |cos(2 pi n f)|/n^5
    :param fraction: fractional part of x
    :return: tuple of floats
    """
    sines, cosines = inner_numerators(fraction, HEAD_TERMS)
    return (float(np.sum(np.abs(sines))) + HEAD_TERMS ** -3.0 / 3.0,
            float(np.sum(np.abs(cosines))) + HEAD_TERMS ** -4.0 / 4.0)


def phase_error(k, power):
    """
    Bound on sum_{n>HEAD_TERMS} 2 pi (n+2) u/(n^power (n^2 + k^2))
    :param k: outer index
    :param power: 4 for the sine remainder, 5 for the cosine one
    :return: float
    """
    return 2.0 * pi * UNIT_ROUNDOFF * min(_PHASE_TAIL[power + 2], _PHASE_TAIL[power] / (k * k))


def split_error(k, low, high, remainder, magnitude, power, combined):
    """
    Rounding bound for fl(low - k^2 high + k^4 remainder)
    :param k: outer index
    :param low: Cl_2 or Cl_3
    :param high: Cl_4 or Cl_5
    :param remainder: computed remainder sum
    :param magnitude: sum of the absolute remainder terms
    :param power: 4 for the sine split, 5 for the cosine one
    :param combined: computed result
    :return: float
    """
    u = UNIT_ROUNDOFF
    k2 = float(k) * k
    k4 = k2 * k2
    # 4u per remainder term, u|R| from fsum
    remainder_error = 4.0 * u * magnitude + u * abs(remainder) + phase_error(k, power)
    return (u * (2.0 * abs(low) + 3.0 * k2 * abs(high) + abs(combined))
            + k4 * (remainder_error + 3.0 * u * abs(remainder)))


def term_error(k, x, a_k, c_k, a_error, c_error):
    """
    Rounding bound for e^(-2 pi k x) (k^2 A_k - k^3 C_k)
    :param k: outer index
    :param x: evaluation point
    :param a_k: computed sine sum
    :param c_k: computed cosine sum
    :param a_error: bound on the error of a_k
    :param c_error: bound on the error of c_k
    :return: float
    """
    k2 = float(k) * k
    k3 = k2 * k
    weight = np.exp(-2.0 * pi * k * x)
    own = UNIT_ROUNDOFF * (5.0 + 6.0 * pi * k * x) * (k2 * abs(a_k) + k3 * abs(c_k))
    return float(weight * (k2 * a_error + k3 * c_error + own))
