""" identities command parser definition """

import logging
from math import pi

from ramanujan_psi.bernoulli import shared_table
from ramanujan_psi.cli.common import (add_common_arguments, emit, fixed_terms, series_report, settings_of,
                                      tolerance_of)
from ramanujan_psi.report import Report, stopwatch
from ramanujan_psi.series import EvalParams
from ramanujan_psi.series.hyperbolic import csch2_sum, lambert_sum
from ramanujan_psi.series.zeta import zeta_even

LOG = logging.getLogger(__name__)

TABLE_SIZE = 24


def add_parser(subparsers):
    """
    Add command subparser
    :param subparsers:
    :return:
    """
    parser = subparsers.add_parser("identities", help="print the hyperbolic, Lambert and even zeta identities")
    add_common_arguments(parser)
    parser.set_defaults(func=cmd_identities)


def cmd_identities(args):
    """
    Print each series next to its closed form
    :param args:
    :return:
    """
    settings = settings_of(args)
    params = EvalParams(tol=tolerance_of(args), k_terms=fixed_terms(args, 10), guard_delta=settings.guard_delta,
                        compensated=settings.compensated)
    table = shared_table(TABLE_SIZE)
    reports = []

    with stopwatch() as elapsed:
        result = csch2_sum(params)
    reports.append(series_report("csch2_sum", 0, result, "series", elapsed[0]))
    reports.append(Report("csch2_closed_form", 0, 1.0 / 6.0 - 1.0 / (2.0 * pi), 0.0, 0, 0, "closed_form"))

    with stopwatch() as elapsed:
        result = lambert_sum(1, params)
    reports.append(series_report("lambert_sum", 1, result, "series", elapsed[0]))
    reports.append(Report("lambert_closed_form", 1, 1.0 / 24.0 - 1.0 / (8.0 * pi), 0.0, 0, 0, "closed_form"))

    for m in (3, 5):
        with stopwatch() as elapsed:
            result = lambert_sum(2 * m - 1, params)
        reports.append(series_report("lambert_sum", 2 * m - 1, result, "series", elapsed[0]))
        reports.append(Report("lambert_closed_form", 2 * m - 1, float(table[2 * m] / (4 * m)), 0.0, 0, 0,
                              "bernoulli"))

    for n in range(0, 7):
        reports.append(Report("zeta", 2 * n, zeta_even(n, table), 0.0, 0, 0, "bernoulli"))

    emit(args, reports)
    return 0
