""" psi command parser definition """

import logging

from ramanujan_psi.cli.common import (add_common_arguments, emit, params_for, require_positive,
                                      series_report, settings_of)
from ramanujan_psi.oracles import OracleConfig, psi_oracle
from ramanujan_psi.report import Report, stopwatch
from ramanujan_psi.series.psi import psi_ramanujan

LOG = logging.getLogger(__name__)


def add_parser(subparsers):
    """
    Add command subparser
    :param subparsers:
    :return:
    """
    parser = subparsers.add_parser("psi", help="evaluate psi(x+1)")
    parser.add_argument("--x", type=float, required=True, help="argument, x > 0")
    parser.add_argument("--method", choices=("ramanujan", "classical"), default="ramanujan",
                        help="hyperbolic series or classical oracle")
    add_common_arguments(parser)
    parser.set_defaults(func=cmd_psi)


def cmd_psi(args):
    """
    Print psi(x+1)
    :param args:
    :return:
    """
    require_positive(args.x, "--x")
    if args.method == "classical":
        cfg = OracleConfig.from_settings(settings_of(args))
        with stopwatch() as elapsed:
            value = psi_oracle(args.x, cfg)
        emit(args, [Report("psi", args.x, value, cfg.tolerance, 0, 0, "classical", elapsed[0])])
        return 0

    params = params_for(args, args.x)
    with stopwatch() as elapsed:
        result = psi_ramanujan(args.x, params)
    emit(args, [series_report("psi", args.x, result, "ramanujan", elapsed[0])])
    return 0
