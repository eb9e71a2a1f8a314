""" gamma command parser definition """

import logging

from ramanujan_psi.cli.common import add_common_arguments, emit, params_for, require_positive, settings_of
from ramanujan_psi.report import Report, stopwatch
from ramanujan_psi.series import GuardBandError, SeriesError
from ramanujan_psi.series.gamma import gamma_any_x, gamma_at_integer

LOG = logging.getLogger(__name__)


def add_parser(subparsers):
    """
    Add command subparser
    :param subparsers:
    :return:
    """
    parser = subparsers.add_parser("gamma", help="evaluate Euler's constant")
    mode = parser.add_mutually_exclusive_group(required=True)
    mode.add_argument("--m", type=int, help="positive integer: limit form")
    mode.add_argument("--x", type=float, help="positive real away from integers")
    add_common_arguments(parser)
    parser.set_defaults(func=cmd_gamma)


def cmd_gamma(args):
    """
    Print gamma, and H_m - gamma in integer mode
    :param args:
    :return:
    """
    if args.m is not None:
        if args.m < 1:
            raise SeriesError("--m must be a positive integer, got %d" % args.m)
        params = params_for(args, float(args.m))
        with stopwatch() as elapsed:
            estimate = gamma_at_integer(args.m, params)
        emit(args, [
            Report("harmonic_minus_gamma", args.m, estimate.limit_value, estimate.error_estimate,
                   params.k_terms, 0, estimate.source.value, elapsed[0]),
            Report("gamma", args.m, estimate.value, estimate.error_estimate,
                   params.k_terms, 0, estimate.source.value, elapsed[0]),
        ])
        return 0

    require_positive(args.x, "--x")
    params = params_for(args, args.x)
    try:
        with stopwatch() as elapsed:
            estimate = gamma_any_x(args.x, params)
    except GuardBandError as err:
        LOG.error("%s (guard band %g); use --m %d instead", err, settings_of(args).guard_delta, err.nearest)
        return 1
    emit(args, [Report("gamma", args.x, estimate.value, estimate.error_estimate,
                       params.k_terms, params.n_terms, estimate.source.value, elapsed[0])])
    return 0
