""" Classical reference values for psi, gamma and zeta """

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import fsum, log, pi, tanh

from ramanujan_psi.bernoulli import shared_table
from ramanujan_psi.errors import RamanujanPsiError
from ramanujan_psi.oracles.summation import (classical_partial_sum, classical_terms_needed,
                                             harmonic_kernel_sum, zeta_partial_and_tail)
from ramanujan_psi.summation import EPSILON, ordered_sum

LOG = logging.getLogger(__name__)

ZETA_START = 32
# below this |x| the odd power series of Im psi(1+ix) is used
IM_PSI_SERIES_LIMIT = 0.01


class OracleError(RamanujanPsiError):
    """ Custom errors for oracles """
    pass


class OracleToleranceError(OracleError):
    """ An oracle could not reach its tolerance """
    pass


@dataclass(frozen=True)
class OracleConfig:
    """ Oracle accuracy knobs """
    shift_threshold: float = 16.0
    tolerance: float = 1e-15
    max_terms: int = 30

    def __post_init__(self):
        if not self.shift_threshold > 0:
            raise OracleError("shift_threshold must be positive: %r" % self.shift_threshold)
        if not self.tolerance > 0:
            raise OracleError("tolerance must be positive: %r" % self.tolerance)
        if self.max_terms < 1:
            raise OracleError("max_terms must be >= 1: %r" % self.max_terms)

    @classmethod
    def from_settings(cls, settings):
        """
        Build from process settings
        :type settings: ramanujan_psi.config.Settings
        :param settings:
        :return: OracleConfig
        """
        return cls(shift_threshold=settings.shift_threshold, tolerance=settings.oracle_tolerance)


DEFAULT_ORACLE = OracleConfig()


@dataclass(frozen=True)
class ClassicalResult:
    """ Outcome of the classical partial-sum baseline """
    value: float
    terms: int
    tail_bound: float
    capped: bool


def psi_oracle(x, cfg=DEFAULT_ORACLE):
    """
    Return psi(1+x) from upward recurrence plus the asymptotic expansion
    :param x: real > 0
    :type cfg: OracleConfig
    :param cfg: accuracy knobs
    :return: float
    """
    if not x > 0:
        raise OracleError("psi oracle needs x > 0, got %r" % (x,))
    return _psi(float(x) + 1.0, cfg)


def _psi(y, cfg):
    """ psi(y) for y > 0 """
    shifts = []
    while y < cfg.shift_threshold:
        shifts.append(1.0 / y)
        y += 1.0

    table = shared_table(2 * cfg.max_terms)
    inv2 = 1.0 / (y * y)
    power = 1.0
    corrections = []
    smallest = float("inf")
    for j in range(1, cfg.max_terms + 1):
        power *= inv2
        term = float(table[2 * j]) / (2 * j) * power
        if abs(term) >= smallest:
            # asymptotic series started to grow
            break
        corrections.append(term)
        smallest = abs(term)
        if smallest < cfg.tolerance / 10.0:
            break

    if smallest > cfg.tolerance:
        raise OracleToleranceError("psi asymptotic expansion stalled at %.3g for y=%r" % (smallest, y))

    return log(y) - 0.5 / y - ordered_sum(corrections) - ordered_sum(shifts)


@lru_cache(maxsize=None)
def euler_gamma_oracle(cfg=DEFAULT_ORACLE):
    """
    Return gamma = 1 - psi(2)
    :type cfg: OracleConfig
    :return: float
    """
    return 1.0 - psi_oracle(1.0, cfg)


def psi_maclaurin_oracle(x, n_terms, cfg=DEFAULT_ORACLE):
    """
    Return psi(1+x) for |x| < 1 from -gamma + sum_{n<=n_terms} (-1)^(n+1) zeta(n+1) x^n

    Truncation error is at most zeta(2) |x|^(n_terms+1)/(1-|x|).
    :param x: |x| < 1
    :param n_terms: number of Maclaurin terms
    :type cfg: OracleConfig
    :return: float
    """
    if not abs(x) < 1:
        raise OracleError("Maclaurin oracle needs |x| < 1, got %r" % (x,))
    if n_terms < 0:
        raise OracleError("n_terms must be >= 0: %r" % (n_terms,))

    terms = []
    power = 1.0
    for n in range(1, n_terms + 1):
        power *= x
        terms.append((-1) ** (n + 1) * zeta_direct_oracle(n + 1, cfg) * power)
    return -euler_gamma_oracle(cfg) + ordered_sum(terms)


def maclaurin_truncation_bound(x, n_terms):
    """
    Bound on the terms left out by psi_maclaurin_oracle
    :param x: |x| < 1
    :param n_terms: number of Maclaurin terms
    :return: float
    """
    return pi ** 2 / 6.0 * abs(x) ** (n_terms + 1) / (1.0 - abs(x))


def psi_shifted_oracle(x, cfg=DEFAULT_ORACLE):
    """
    Return psi(1+x) for x > -1, using psi(1+x) = psi(2+x) - 1/(1+x) below zero
    :param x: real > -1
    :type cfg: OracleConfig
    :return: float
    """
    if not x > -1:
        raise OracleError("psi oracle needs x > -1, got %r" % (x,))
    if x > 0:
        return psi_oracle(x, cfg)
    return _psi(float(x) + 2.0, cfg) - 1.0 / (1.0 + x)


def zeta_direct_oracle(s, cfg=DEFAULT_ORACLE):
    """
    Return zeta(s) for real s > 1 as a direct sum with Euler-Maclaurin tail
    :param s: real > 1
    :type cfg: OracleConfig
    :return: float
    """
    if not s > 1:
        raise OracleError("zeta oracle needs s > 1, got %r" % (s,))
    result = zeta_partial_and_tail(float(s), ZETA_START, shared_table(2 * cfg.max_terms),
                                   cfg.tolerance, cfg.max_terms)
    if result is None:
        raise OracleToleranceError("zeta tail corrections did not settle for s=%r" % (s,))
    head, tail, _ = result
    return head + tail


def zeta_bracket(s, terms):
    """
    Return integral bounds (lower, upper) around zeta(s) after `terms` terms
    :param s: real > 1
    :param terms: number of directly summed terms
    :return: tuple
    """
    if not s > 1:
        raise OracleError("zeta bracket needs s > 1, got %r" % (s,))
    if terms < 1:
        raise OracleError("zeta bracket needs at least one term")
    head = fsum(n ** -float(s) for n in range(1, terms + 1))
    lower = (terms + 1) ** (1.0 - s) / (s - 1.0)
    upper = terms ** (1.0 - s) / (s - 1.0)
    # each power and tail carries a few ulps
    slack = 4.0 * EPSILON * (head + upper)
    return head + lower - slack, head + upper + slack


def re_psi_one_plus_ik(k, cfg=DEFAULT_ORACLE):
    """
    Return Re psi(1+ik) for k > 0
    :param k: real > 0
    :type cfg: OracleConfig
    :return: float
    """
    if not k > 0:
        raise OracleError("Re psi(1+ik) needs k > 0, got %r" % (k,))
    return harmonic_kernel_sum(k) - euler_gamma_oracle(cfg)


def im_psi_one_plus_ix(x):
    """
    Return Im psi(1+ix) = -1/(2x) + (pi/2) coth(pi x)
    :param x: real > 0
    :return: float
    """
    if not x > 0:
        raise OracleError("Im psi(1+ix) needs x > 0, got %r" % (x,))
    if abs(x) < IM_PSI_SERIES_LIMIT:
        x2 = x * x
        return x * (pi ** 2 / 6.0 - x2 * (pi ** 4 / 90.0 - x2 * (pi ** 6 / 945.0
                                                            - x2 * pi ** 8 / 9450.0)))
    return -0.5 / x + 0.5 * pi / tanh(pi * x)


def classical_psi(x, tol, cap=10 ** 8, compensated=False, cfg=DEFAULT_ORACLE):
    """
    Baseline: psi(1+x) = -gamma + sum_n x/(n(n+x)) truncated at x/N <= tol
    :param x: real > 0
    :param tol: target
    :param cap: maximal number of terms
    :param compensated: compensated summation
    :type cfg: OracleConfig
    :return: ClassicalResult
    """
    if not x > 0:
        raise OracleError("classical baseline needs x > 0, got %r" % (x,))
    needed = classical_terms_needed(x, tol)
    terms = min(needed, cap)
    if needed > cap:
        LOG.warning("Classical baseline capped at %d of %d terms", cap, needed)
    value = -euler_gamma_oracle(cfg) + classical_partial_sum(float(x), terms, compensated)
    return ClassicalResult(value, terms, x / terms, needed > cap)
