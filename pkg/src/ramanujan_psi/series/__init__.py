""" Ramanujan series evaluators: shared types

Evaluators live in the submodules (hyperbolic, double_series, psi, gamma,
zeta, identities); this module only holds the value types so the planner can
import them without a cycle.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from math import ceil, pi

from ramanujan_psi.config import MIN_TOLERANCE
from ramanujan_psi.errors import RamanujanPsiError

LOG = logging.getLogger(__name__)

# accepted gamma estimates must agree with the oracle this closely
GAMMA_CONSISTENCY = 1e-10


class SeriesError(RamanujanPsiError):
    """ Custom errors for series evaluation """
    pass


class GuardBandError(SeriesError):
    """ x fell inside the band around a positive integer """

    def __init__(self, x, nearest, guard_delta):
        super().__init__("x=%r lies within %g of the integer %d" % (x, guard_delta, nearest))
        self.x = x
        self.nearest = nearest
        self.guard_delta = guard_delta


class ConsistencyError(SeriesError):
    """ A self-consistency cross-check failed """
    pass


@dataclass(frozen=True)
class EvalParams:
    """ Truncation parameters for one evaluation """
    tol: float = 1e-13
    k_terms: int = 8
    n_terms: int = 4096
    guard_delta: float = 1e-3
    s_terms: int = None
    compensated: bool = False

    def __post_init__(self):
        if not self.tol >= MIN_TOLERANCE:
            raise SeriesError("tol must be >= %g: %r" % (MIN_TOLERANCE, self.tol))
        if not 0 < self.guard_delta < 0.25:
            raise SeriesError("guard_delta must lie in (0, 1/4): %r" % self.guard_delta)
        if self.k_terms < 1 or self.n_terms < 1:
            raise SeriesError("k_terms and n_terms must be >= 1")
        if self.s_terms is not None and self.s_terms < 1:
            raise SeriesError("s_terms must be >= 1")

    def outer_terms(self, x):
        """
        Outer terms of the double series at x
        :param x: positive real
        :return: int
        """
        if self.s_terms is not None:
            return self.s_terms
        return int(ceil(self.k_terms / min(x, 1.0)))


@dataclass(frozen=True)
class SeriesValue:
    """ Value with an absolute error bound """
    value: float
    error_estimate: float
    k_used: int
    n_used: int
    s_used: int = 0


@dataclass(frozen=True)
class ModularPair:
    """ alpha, beta > 0 with alpha * beta = pi^2 """
    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > 0 and self.beta > 0):
            raise SeriesError("alpha and beta must be positive: %r, %r" % (self.alpha, self.beta))
        if abs(self.alpha * self.beta - pi * pi) > 1e-14 * pi * pi:
            raise SeriesError("alpha * beta must equal pi^2: %r" % (self.alpha * self.beta))

    @classmethod
    def from_alpha(cls, alpha):
        """
        Complete a pair from alpha
        :param alpha: positive real
        :return: ModularPair
        """
        if not alpha > 0:
            raise SeriesError("alpha must be positive: %r" % (alpha,))
        return cls(alpha, pi * pi / alpha)


class GammaSource(Enum):
    """ Formula a gamma estimate came from """
    INTEGER_LIMIT = "integer_limit"
    ANY_X = "any_x"


@dataclass(frozen=True)
class EulerGamma:
    """ Estimate of Euler's constant """
    value: float
    source: GammaSource
    error_estimate: float = 0.0
    # right side the estimate was solved from
    limit_value: float = None


def nearest_integer(x):
    """
    Nearest positive integer to x, or 0
    :param x: positive real
    :return: int
    """
    return max(0, int(round(x)))


def in_guard_band(x, guard_delta):
    """
    Return the integer m >= 1 with |x - m| < guard_delta, else None
    :param x: positive real
    :param guard_delta: band half-width
    :return: int or None
    """
    m = nearest_integer(x)
    if m >= 1 and abs(x - m) < guard_delta:
        return m
    return None


def check_positive(x, name="x"):
    """
    Reject non-positive arguments
    :param x: argument
    :param name: argument name for the message
    :return:
    """
    if not x > 0:
        raise SeriesError("%s must be > 0, got %r" % (name, x))
