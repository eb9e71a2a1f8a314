""" psi-prime command parser definition """

import logging

from ramanujan_psi.cli.common import add_common_arguments, emit, params_for, require_positive, series_report
from ramanujan_psi.report import stopwatch
from ramanujan_psi.series.psi import psi_prime_ramanujan

LOG = logging.getLogger(__name__)


def add_parser(subparsers):
    """
    Add command subparser
    :param subparsers:
    :return:
    """
    parser = subparsers.add_parser("psi-prime", help="evaluate psi'(x+1)")
    parser.add_argument("--x", type=float, required=True, help="argument, x > 0 away from integers")
    add_common_arguments(parser)
    parser.set_defaults(func=cmd_psi_prime)


def cmd_psi_prime(args):
    """
    Print psi'(x+1)
    :param args:
    :return:
    """
    require_positive(args.x, "--x")
    params = params_for(args, args.x)
    with stopwatch() as elapsed:
        result = psi_prime_ramanujan(args.x, params)
    emit(args, [series_report("psi_prime", args.x, result, "ramanujan", elapsed[0])])
    return 0
