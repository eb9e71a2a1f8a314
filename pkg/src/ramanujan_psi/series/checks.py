""" Verification suites built from the series evaluators """

import logging
from dataclasses import dataclass, replace
from math import exp, expm1, pi, sinh

from ramanujan_psi.bernoulli import shared_table
from ramanujan_psi.oracles import euler_gamma_oracle, psi_oracle, zeta_direct_oracle
from ramanujan_psi.oracles.quadrature import s_integral_oracle
from ramanujan_psi.planner import plan
from ramanujan_psi.series import EvalParams, ModularPair, SeriesError
from ramanujan_psi.series.double_series import double_series_S
from ramanujan_psi.series.gamma import gamma_any_x, integer_limit_rhs
from ramanujan_psi.series.identities import (asymptotic_residual, coefficient_identity_residual,
                                             csch2_expansion_residual, csch2_identity_residual,
                                             even_coefficient_residual, lambert_expansion_residual,
                                             lambert_identity_residual, lambert_linear_residual, maclaurin_slope,
                                             partial_fraction_psi_plus_gamma, psi_prime_maclaurin_residual,
                                             zeta_odd_limit_residual)
from ramanujan_psi.series.psi import cot_pairing, psi_prime_ramanujan, psi_ramanujan
from ramanujan_psi.series.zeta import zeta_even, zeta_odd, zeta_odd_general

LOG = logging.getLogger(__name__)

SUITES = ("identities", "equivalence", "asymptotic")
TABLE_SIZE = 64

PSI_GRID = (0.25, 0.5, 1.5, 2.75, 10.3, 1.0, 2.0, 3.0)
CHAIN_GRID = (0.3, 1.7, 4.2)
GAMMA_GRID = (0.5, 2.25, 6.75)
HALF_INTEGERS = (2, 5, 10, 20)
EXPANSION_POINTS = (0.1, 0.3, 0.5)
# 1 - gamma truncated to thirteen places, as digits
ONE_MINUS_GAMMA_DIGITS = 4227843350984


@dataclass(frozen=True)
class CheckResult:
    """ Outcome of one check """
    name: str
    input: object
    residual: float
    allowed: float
    k_used: int = 0
    n_used: int = 0

    @property
    def passed(self):
        """ Residual within allowance """
        return abs(self.residual) <= self.allowed


def run_suite(suite, settings):
    """
    Run one suite, or all of them
    :param suite: identities, equivalence, asymptotic or all
    :type settings: ramanujan_psi.config.Settings
    :return: list of CheckResult in a fixed order
    """
    if suite == "all":
        names = SUITES
    elif suite in SUITES:
        names = (suite,)
    else:
        raise SeriesError("Unknown suite: %s" % suite)

    results = []
    for name in names:
        LOG.info("Running %s suite", name)
        results.extend(_SUITES[name](settings))
    return results


def _base_params(settings, k_terms=10):
    return EvalParams(tol=settings.tolerance, k_terms=k_terms, guard_delta=settings.guard_delta,
                      compensated=settings.compensated)


def identities_suite(settings):
    """
    Hyperbolic, Lambert and zeta identities
    :type settings: ramanujan_psi.config.Settings
    :return: list of CheckResult
    """
    table = shared_table(TABLE_SIZE)
    params = _base_params(settings)
    results = []

    value = csch2_identity_residual(params)
    results.append(CheckResult("csch2_identity", 10, value.value, 1e-15, value.k_used))
    value = lambert_linear_residual(params)
    results.append(CheckResult("lambert_linear_identity", 1, value.value, 1e-15, value.k_used))
    for m in (3, 5):
        results.append(CheckResult("lambert_identity", m, lambert_identity_residual(m, table, params),
                                   1e-14, params.k_terms))
    value = zeta_odd_limit_residual(table, params)
    results.append(CheckResult("zeta_odd_limit_identity", 0, value.value, 1e-13, value.k_used))

    for x in EXPANSION_POINTS:
        value = lambert_expansion_residual(x, params)
        results.append(CheckResult("lambert_expansion", x, value.value, value.error_estimate + 1e-15, value.k_used))
        value = csch2_expansion_residual(x, params)
        results.append(CheckResult("csch2_expansion", x, value.value, value.error_estimate + 1e-15, value.k_used))
        results.append(CheckResult("psi_prime_maclaurin", x, psi_prime_maclaurin_residual(x, params), 1e-10,
                                   params.k_terms))
    for n in range(5):
        results.append(CheckResult("even_coefficient", n, even_coefficient_residual(n, table), 1e-13))
    results.append(CheckResult("maclaurin_slope", 0, maclaurin_slope(params) + 2.0 * zeta_direct_oracle(3), 1e-6,
                               params.k_terms))

    results.append(CheckResult("zeta_even", 0, zeta_even(0, table) + 0.5, 0.0))
    for n in range(1, 7):
        results.append(CheckResult("zeta_even", n, zeta_even(n, table) - zeta_direct_oracle(2 * n), 1e-13))

    for n in (1, 2, 3):
        value = zeta_odd(n, table, params)
        results.append(CheckResult("zeta_odd", n, value.value - zeta_direct_oracle(2 * n + 1), 1e-12,
                                   value.k_used))
        if n > 2:
            continue
        for alpha in (pi, pi * pi / 2.0, 2.0 * pi * pi):
            general = zeta_odd_general(n, ModularPair.from_alpha(alpha), table, params)
            results.append(CheckResult("zeta_odd_general", [n, alpha], general.value - value.value, 1e-11,
                                       general.k_used))

    for m in (1, 2, 3):
        # both printed forms of the limit of the cotangent pairing
        first = 1.0 / (2.0 * m * expm1(2.0 * pi * m)) - pi / (2.0 * sinh(pi * m) ** 2)
        second = 1.0 / (2.0 * m * expm1(2.0 * pi * m)) - 2.0 * pi * exp(2.0 * pi * m) / expm1(2.0 * pi * m) ** 2
        results.append(CheckResult("cot_pairing_limit", m, cot_pairing(m, m) - first, 1e-16))
        results.append(CheckResult("cot_pairing_limit_forms", m, first - second, 1e-16))
    return results


def equivalence_suite(settings):
    """
    The psi formula against the oracles and its rearrangements
    :type settings: ramanujan_psi.config.Settings
    :return: list of CheckResult
    """
    results = []
    for x in PSI_GRID:
        value = psi_ramanujan(x, plan(settings.tolerance, x, settings))
        results.append(CheckResult("psi_vs_oracle", x, value.value - psi_oracle(x), 1e-11,
                                   value.k_used, value.n_used))

    for x in CHAIN_GRID:
        params = plan(settings.tolerance, x, settings)
        psi = psi_ramanujan(x, params)
        fraction = partial_fraction_psi_plus_gamma(x, params)
        gamma = gamma_any_x(x, params)
        allowed = 2.0 * (psi.error_estimate + fraction.error_estimate + gamma.error_estimate) + 1e-12
        results.append(CheckResult("partial_fraction_chain", x, psi.value - fraction.value + gamma.value,
                                   allowed, params.k_terms, params.n_terms))

    for x in (0.3, 1.2):
        value = double_series_S(x, plan(settings.tolerance, x, settings))
        results.append(CheckResult("double_series_vs_integral", x, value.value - s_integral_oracle(x), 1e-9,
                                   value.k_used, value.n_used))

    reference = euler_gamma_oracle()
    estimates = []
    for x in GAMMA_GRID:
        estimate = gamma_any_x(x, plan(settings.tolerance, x, settings))
        estimates.append(estimate.value)
        results.append(CheckResult("gamma_any_x", x, estimate.value - reference, 1e-10))
    results.append(CheckResult("gamma_any_x_spread", list(GAMMA_GRID), max(estimates) - min(estimates), 2e-11))

    five = replace(_base_params(settings, k_terms=5), s_terms=5)
    rhs = integer_limit_rhs(1, five)
    results.append(CheckResult("one_minus_gamma_five_terms", 1, rhs.value - (1.0 - reference), 5e-14, 5))
    results.append(CheckResult("one_minus_gamma_thirteen_places", 1,
                               int(rhs.value * 10 ** 13) - ONE_MINUS_GAMMA_DIGITS, 0, 5))

    prime = psi_prime_ramanujan(0.5, plan(settings.tolerance, 0.5, settings))
    results.append(CheckResult("psi_prime_half", 0.5, prime.value - (pi * pi / 2.0 - 4.0), 1e-10,
                               prime.k_used))
    return results


def asymptotic_suite(settings):
    """
    Growth of the log-corrected psi at half integers
    :type settings: ramanujan_psi.config.Settings
    :return: list of CheckResult
    """
    params = _base_params(settings)
    value = coefficient_identity_residual(params)
    results = [CheckResult("coefficient_identity", 0, value.value, 1e-13, value.k_used)]

    scaled = []
    for n in HALF_INTEGERS:
        x = n + 0.5
        scaled.append(x * abs(asymptotic_residual(x, params)))
        # x * residual approaches 1/2 from below
        results.append(CheckResult("scaled_asymptotic_residual", x, scaled[-1], 1.0, params.k_terms))
    # no growth: the last scaled residual stays within twice the first
    results.append(CheckResult("asymptotic_growth", [HALF_INTEGERS[0], HALF_INTEGERS[-1]],
                               max(0.0, scaled[-1] - 2.0 * scaled[0]), 0.0))
    return results


_SUITES = {
    "identities": identities_suite,
    "equivalence": equivalence_suite,
    "asymptotic": asymptotic_suite,
}
