""" Direct summation oracles with Euler-Maclaurin tails """

import logging
from math import ceil, factorial, log1p

import numpy as np

from ramanujan_psi.bernoulli import shared_table
from ramanujan_psi.summation import ordered_sum

LOG = logging.getLogger(__name__)

# first index handed to the Euler-Maclaurin tail
EM_START = 64
# Euler-Maclaurin correction terms are added until they drop below this
EM_FLOOR = 1e-20
EM_MAX_ORDER = 12

CHUNK = 1 << 20


def harmonic_kernel_sum(a):
    """
    Return sum_{n>=1} a^2/(n(n^2+a^2)), i.e. gamma + Re psi(1+ia), without using gamma

    Terms up to EM_START-1 are summed directly; the rest is the integral
    1/2 log(1 + a^2/N^2) plus Euler-Maclaurin corrections built from the
    closed-form derivatives of f(t) = 1/t - Re 1/(t - ia).
    :param a: real >= 0
    :return: float
    """
    if a == 0:
        return 0.0

    a = float(a)
    n = np.arange(1, EM_START, dtype=float)
    head = ordered_sum(a * a / (n * (n * n + a * a)))

    big_n = float(EM_START)
    tail = 0.5 * log1p((a / big_n) ** 2) + 0.5 * a * a / (big_n * (big_n * big_n + a * a))

    table = shared_table(2 * EM_MAX_ORDER)
    pole = complex(big_n, -a)
    for j in range(1, EM_MAX_ORDER + 1):
        order = 2 * j - 1
        # f^(r)(t) = (-1)^r r! (1/t^(r+1) - Re 1/(t - ia)^(r+1)), r odd
        deriv = -factorial(order) * (big_n ** -(order + 1) - (pole ** -(order + 1)).real)
        correction = -float(table[2 * j]) / factorial(2 * j) * deriv
        tail += correction
        if abs(correction) < EM_FLOOR:
            break

    return head + tail


def zeta_partial_and_tail(s, start, table, tolerance, max_terms):
    """
    Return (sum_{n<start} n^-s, Euler-Maclaurin tail from start, last correction)
    :param s: real > 1
    :param start: first index of the tail
    :param table: Bernoulli table
    :param tolerance: stop once a correction drops below tolerance/10
    :param max_terms: maximal number of corrections
    :return: tuple, or None if the corrections did not settle
    """
    n = np.arange(1, start, dtype=float)
    head = ordered_sum(np.power(n, -s))

    big_n = float(start)
    tail = big_n ** (1.0 - s) / (s - 1.0) + 0.5 * big_n ** -s
    rising = s
    last = abs(tail)
    for j in range(1, max_terms + 1):
        if j > 1:
            rising *= (s + 2 * j - 3) * (s + 2 * j - 2)
        correction = float(table[2 * j]) / factorial(2 * j) * rising * big_n ** (-s - 2 * j + 1)
        tail += correction
        last = abs(correction)
        if last < tolerance / 10.0:
            return head, tail, last

    return None


def classical_partial_sum(x, terms, compensated=False):
    """
    Return sum_{n=1}^{terms} x/(n(n+x)) in chunks, left to right
    :param x: positive real
    :param terms: number of terms
    :param compensated: use math.fsum per chunk
    :return: float
    """
    total = 0.0
    for first in range(1, terms + 1, CHUNK):
        last = min(terms, first + CHUNK - 1)
        n = np.arange(first, last + 1, dtype=float)
        total += ordered_sum(x / (n * (n + x)), compensated)
    return total


def classical_terms_needed(x, tol):
    """
    Terms until the monotone tail bound x/N meets tol
    :param x: positive real
    :param tol: target
    :return: int
    """
    return int(ceil(x / tol))
