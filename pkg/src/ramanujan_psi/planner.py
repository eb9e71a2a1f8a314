""" Term counts from a tolerance, and rigorous tail bounds """

import logging
from dataclasses import dataclass
from enum import Enum
from math import ceil, exp, expm1, floor, inf, log, pi

import mpmath

from ramanujan_psi.config import MIN_TOLERANCE, Settings
from ramanujan_psi.errors import RamanujanPsiError
from ramanujan_psi.series import EvalParams, in_guard_band
from ramanujan_psi.series.clausen import UNIT_ROUNDOFF, clausen_values, head_magnitudes, split_error, term_error

LOG = logging.getLogger(__name__)

# |k^2 A_k - k^3 C_k| <= k (ENVELOPE_CONSTANT + log k) for the double series
ENVELOPE_CONSTANT = 2.58
MIN_INNER_TERMS = 16
MAX_OUTER_TERMS = 10 ** 5
# explicit summation steps before a ratio bound must take over
MAX_EXPLICIT_STEPS = 10 ** 6
# rounding every double series carries whatever the tolerance
ROUNDING_FLOOR = 5e-14


class PlannerError(RamanujanPsiError):
    """ Custom errors for planning """
    pass


class ToleranceError(PlannerError):
    """ Tolerance out of reach in double precision """
    pass


class TailFamily(Enum):
    """ Series families with a closed-form tail bound """
    EXP_ENVELOPE = "exp_envelope"
    CSCH2 = "csch2"
    LAMBERT = "lambert"
    LOG_CSCH2 = "log_csch2"
    INNER_SIN = "inner_sin"
    INNER_COS = "inner_cos"
    # sum 2k/((e^(2 pi k) - 1)(k^2 - x^2))
    RATIONAL = "rational"


@dataclass(frozen=True)
class TailBound:
    """ Upper bound for a series tail starting at first_omitted_index """
    family: TailFamily
    first_omitted_index: int
    bound: float


def distance_beyond(x, first, exclude=None):
    """
    Return min |k - x| over integers k >= first, k != exclude
    :param x: real
    :param first: first index
    :param exclude: index left out of the sum
    :return: float
    """
    candidates = {first, int(x) - 1, int(x), int(x) + 1, int(x) + 2}
    distances = [abs(k - x) for k in candidates if k >= first and k != exclude]
    return min(distances)


def geometric_tail(term, ratio, first):
    """
    Bound sum_{k>=first} term(k)

    ratio(k) must bound term(j+1)/term(j) for every j >= k and must not
    grow with k; terms are added one by one until it drops below one.
    :param term: callable k -> upper bound of the k-th term
    :param ratio: callable k -> ratio bound
    :param first: first index
    :return: float
    """
    total = 0.0
    k = first
    for _ in range(MAX_EXPLICIT_STEPS):
        rho = ratio(k)
        if rho < 1.0:
            return total + term(k) / (1.0 - rho)
        total += term(k)
        k += 1
    return inf


def tail_bound(family, first_omitted, x=1.0, power=0, scale=pi, exclude=None):
    """
    Closed-form tail bound for one series family
    :type family: TailFamily
    :param family: series family
    :param first_omitted: first index not summed, >= 1
    :param x: evaluation point (envelope, rational, log and inner families)
    :param power: k exponent (csch2 and lambert families)
    :param scale: exponential scale, pi for the plain sums
    :param exclude: index left out of a rational or log sum
    :return: TailBound
    """
    try:
        family = TailFamily(family)
    except ValueError:
        raise PlannerError("Unknown tail family: %r" % (family,))
    if first_omitted < 1:
        raise PlannerError("first_omitted must be >= 1: %r" % (first_omitted,))

    first = int(first_omitted)
    bound = _BOUNDS[family](first, float(x), power, float(scale), exclude)
    return TailBound(family, first, bound)


def _power_ratio(power, decay):
    """ Ratio bound for k^power * decay^k """
    if power <= 0:
        return lambda k: decay
    return lambda k: (1.0 + 1.0 / k) ** power * decay


def _csch2_bound(first, x, power, scale, exclude):
    denominator = expm1(-2.0 * scale * first) ** 2
    return geometric_tail(lambda k: k ** power * 4.0 * exp(-2.0 * scale * k) / denominator,
                          _power_ratio(power, exp(-2.0 * scale)), first)


def _lambert_bound(first, x, power, scale, exclude):
    denominator = -expm1(-2.0 * scale * first)
    return geometric_tail(lambda k: k ** power * exp(-2.0 * scale * k) / denominator,
                          _power_ratio(power, exp(-2.0 * scale)), first)


def _rational_bound(first, x, power, scale, exclude):
    gap = distance_beyond(x, first, exclude)
    if gap == 0:
        return inf
    denominator = -expm1(-2.0 * pi * first)
    return geometric_tail(lambda k: 2.0 * exp(-2.0 * pi * k) / (denominator * gap),
                          lambda k: exp(-2.0 * pi), first)


def _log_csch2_bound(first, x, power, scale, exclude):
    gap = distance_beyond(x, first, exclude)
    if gap == 0:
        return inf
    denominator = expm1(-2.0 * pi * first) ** 2

    def weight(k):
        return log(2.0) + 4.0 * log(k + x) + max(0.0, -log(gap))

    return geometric_tail(lambda k: weight(k) * 4.0 * exp(-2.0 * pi * k) / denominator,
                          lambda k: (1.0 + 4.0 / ((k + x) * weight(k))) * exp(-2.0 * pi), first)


def _envelope_bound(first, x, power, scale, exclude):
    decay = exp(-2.0 * pi * x)

    def term(k):
        return 2.0 * pi * k * (ENVELOPE_CONSTANT + log(k)) * exp(-2.0 * pi * k * x)

    return geometric_tail(term,
                          lambda k: (1.0 + 1.0 / k) * (1.0 + 1.0 / (k * ENVELOPE_CONSTANT)) * decay,
                          first)


def _weighted_polylog(order, x):
    """ 2 pi sum_k k^order e^(-2 pi k x) """
    return 2.0 * pi * float(mpmath.polylog(-order, mpmath.exp(-2 * mpmath.pi * x)))


def _inner_sin_bound(first, x, power, scale, exclude):
    # k^4 sum_{n>=N} n^-6 weighted by k^2
    return _weighted_polylog(6, x) * (first ** -6.0 + first ** -5.0 / 5.0)


def _inner_cos_bound(first, x, power, scale, exclude):
    # k^4 sum_{n>=N} n^-7 weighted by k^3
    return _weighted_polylog(7, x) * (first ** -7.0 + first ** -6.0 / 6.0)


_BOUNDS = {
    TailFamily.EXP_ENVELOPE: _envelope_bound,
    TailFamily.CSCH2: _csch2_bound,
    TailFamily.LAMBERT: _lambert_bound,
    TailFamily.LOG_CSCH2: _log_csch2_bound,
    TailFamily.INNER_SIN: _inner_sin_bound,
    TailFamily.INNER_COS: _inner_cos_bound,
    TailFamily.RATIONAL: _rational_bound,
}


def base_terms(tol, scale=pi):
    """
    Return ceil(log(40/tol)/(2 scale)), at least 1
    :param tol: target
    :param scale: exponential scale
    :return: int
    """
    return max(1, int(ceil(log(40.0 / tol) / (2.0 * scale))))


def terms_for_scale(tol, family, scale=pi, power=0, max_terms=None):
    """
    Smallest count whose tail for the family is <= tol/4
    :param tol: target
    :param family: CSCH2 or LAMBERT
    :param scale: exponential scale
    :param power: k exponent
    :param max_terms: cap, None for no cap
    :return: int
    """
    count = base_terms(tol, scale)
    while tail_bound(family, count + 1, power=power, scale=scale).bound > tol / 4.0:
        count += 1
        if max_terms is not None and count > max_terms:
            raise ToleranceError("tol=%g needs more than %d terms at scale %g" % (tol, max_terms, scale))
    return count


def plan(tol, x, settings=None):
    """
    Choose term counts for psi_ramanujan at x
    :param tol: target absolute error >= 1e-15
    :param x: positive real
    :type settings: ramanujan_psi.config.Settings
    :param settings: caps and guard band (defaults when None)
    :return: EvalParams
    """
    if settings is None:
        settings = Settings()

    if not tol >= MIN_TOLERANCE:
        raise ToleranceError("tol=%r is below %g, unattainable in double precision" % (tol, MIN_TOLERANCE))
    if not x > 0:
        raise PlannerError("x must be > 0, got %r" % (x,))

    exclude = in_guard_band(x, settings.guard_delta)
    quarter = tol / 4.0

    k_terms = base_terms(tol)
    while (tail_bound(TailFamily.RATIONAL, k_terms + 1, x, exclude=exclude).bound > quarter
           or tail_bound(TailFamily.LOG_CSCH2, k_terms + 1, x, exclude=exclude).bound > quarter):
        k_terms += 1
        if k_terms > settings.max_terms:
            raise ToleranceError("tol=%g needs more than %d k terms at x=%r" % (tol, settings.max_terms, x))

    s_terms = 1
    while tail_bound(TailFamily.EXP_ENVELOPE, s_terms + 1, x).bound > quarter:
        s_terms += 1
        if s_terms > MAX_OUTER_TERMS:
            raise ToleranceError("double series at x=%r needs more than %d outer terms" % (x, MAX_OUTER_TERMS))

    rounding = double_series_rounding(x, s_terms)
    if rounding > quarter + ROUNDING_FLOOR:
        raise ToleranceError("double series at x=%r loses about %.2g to cancellation, above tol=%g"
                             % (x, rounding, tol))

    n_terms = _inner_terms(quarter, x, settings.n_terms_cap)

    LOG.debug("plan(tol=%g, x=%r): k_terms=%d s_terms=%d n_terms=%d", tol, x, k_terms, s_terms, n_terms)
    return EvalParams(tol=tol, k_terms=k_terms, n_terms=n_terms, guard_delta=settings.guard_delta,
                      s_terms=s_terms, compensated=settings.compensated)


def double_series_rounding(x, outer):
    """
    A-priori estimate of the rounding bound double_series_S reports at x

    The split inner sums cancel like k^4 and k^5 against the Clausen
    values, so small x with many outer terms loses digits the tolerance
    cannot buy back.
    :param x: positive real
    :param outer: number of outer terms
    :return: float
    """
    fraction = x - floor(x)
    if fraction == 0:
        return 0.0
    cl2, cl4, cl3, cl5 = clausen_values(fraction)
    abs_sin, abs_cos = head_magnitudes(fraction)

    rounding = 0.0
    sizes = []
    for k in range(1, outer + 1):
        k2 = float(k) * k
        # |A_k| <= sum 1/(n^2 + k^2), |C_k| <= sum 1/(n (n^2 + k^2))
        a_size = pi / (2.0 * k)
        c_size = 1.0 / (1.0 + k2) + log(1.0 + k2) / (2.0 * k2)
        rest_sin = abs_sin / (1.0 + k2)
        rest_cos = abs_cos / (1.0 + k2)
        a_error = split_error(k, cl2, cl4, rest_sin, rest_sin, 4, a_size)
        c_error = split_error(k, cl3, cl5, rest_cos, rest_cos, 5, c_size)
        rounding += term_error(k, x, a_size, c_size, a_error, c_error)
        sizes.append(exp(-2.0 * pi * k * x) * (k2 * a_size + k2 * k * c_size))

    total = sum(sizes)
    u = UNIT_ROUNDOFF
    summation = sum(min(u * total, size) for size in sizes[1:]) + u * total
    return 2.0 * pi * (rounding + summation) + 2.0 * pi * 2.0 * u * total


def _inner_terms(target, x, cap):
    """ Smallest n_terms whose weighted inner tails fit target """

    def inner(count):
        return (tail_bound(TailFamily.INNER_SIN, count + 1, x).bound
                + tail_bound(TailFamily.INNER_COS, count + 1, x).bound)

    # leading behaviour of the sine bound gives the starting point
    guess = (_weighted_polylog(6, x) / (5.0 * target / 2.0)) ** 0.2
    count = max(MIN_INNER_TERMS, int(guess))
    if count > cap:
        raise ToleranceError("inner sums at x=%r need about %d terms, cap is %d" % (x, count, cap))
    while inner(count) > target:
        count = max(count + 1, int(count * 1.05))
        if count > cap:
            raise ToleranceError("inner sums at x=%r need more than %d terms" % (x, cap))
    return count
