""" Quadrature oracles """

import logging
from math import ceil, floor, log

import mpmath

from ramanujan_psi.oracles import OracleError, OracleToleranceError

LOG = logging.getLogger(__name__)

WORKING_DPS = 20
ACCEPTED_ERROR = 1e-10
# integrand envelope is cut where it falls below this
ENVELOPE_FLOOR = 1e-18


def s_integral_oracle(x, max_degree=8):
    """
    Return S(x) = int_x^inf log|2 sin(pi v)| pi^2 cosh(pi v)/sinh^3(pi v) dv

    Panels are split at integers so that each logarithmic singularity
    sits on a panel end, where tanh-sinh copes with it.
    :param x: positive non-integer real
    :param max_degree: tanh-sinh refinement levels
    :return: float
    """
    if not x > 0:
        raise OracleError("S integral needs x > 0, got %r" % (x,))
    if abs(x - round(x)) < 1e-6:
        raise OracleError("S integral needs x away from integers, got %r" % (x,))

    with mpmath.workdps(WORKING_DPS):
        start = mpmath.mpf(x)
        weight = mpmath.pi ** 2 * mpmath.cosh(mpmath.pi * start) / mpmath.sinh(mpmath.pi * start) ** 3
        # weight decays like e^(-2 pi v)
        span = max(1.0, (float(mpmath.log(weight)) - log(ENVELOPE_FLOOR)) / (2.0 * float(mpmath.pi)))
        end = x + span
        points = [start] + [mpmath.mpf(k) for k in range(int(floor(x)) + 1, int(ceil(end)))]
        points.append(mpmath.mpf(end))

        def integrand(v):
            return mpmath.log(abs(2 * mpmath.sinpi(v))) * mpmath.pi ** 2 \
                * mpmath.cosh(mpmath.pi * v) / mpmath.sinh(mpmath.pi * v) ** 3

        value, error = mpmath.quad(integrand, points, maxdegree=max_degree, error=True)

    LOG.debug("S integral at %r: error estimate %s", x, error)
    if error > ACCEPTED_ERROR:
        raise OracleToleranceError("S integral at %r did not converge (error %.3g)" % (x, float(error)))
    return float(value)


def lambert_integral_oracle(power):
    """
    Return int_0^inf v^power/(e^(2 pi v) - 1) dv
    :param power: odd integer >= 1
    :return: float
    """
    if power < 1:
        raise OracleError("Lambert integral needs power >= 1, got %r" % (power,))
    with mpmath.workdps(WORKING_DPS):
        value = mpmath.quad(lambda v: v ** power / mpmath.expm1(2 * mpmath.pi * v),
                            [0, 1, mpmath.inf])
    return float(value)
