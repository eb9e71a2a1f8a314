""" zeta-odd command parser definition """

import logging

from ramanujan_psi.bernoulli import shared_table
from ramanujan_psi.cli.common import (add_common_arguments, emit, fixed_terms, require_positive, series_report,
                                      settings_of, tolerance_of)
from ramanujan_psi.planner import TailFamily, terms_for_scale
from ramanujan_psi.report import stopwatch
from ramanujan_psi.series import EvalParams, ModularPair, SeriesError
from ramanujan_psi.series.zeta import zeta_odd, zeta_odd_general

LOG = logging.getLogger(__name__)


def add_parser(subparsers):
    """
    Add command subparser
    :param subparsers:
    :return:
    """
    parser = subparsers.add_parser("zeta-odd", help="evaluate zeta(2N+1)")
    parser.add_argument("--n", type=int, required=True, help="N >= 1")
    parser.add_argument("--alpha", type=float, default=None,
                        help="alpha > 0 of the modular pair (beta = pi^2/alpha)")
    add_common_arguments(parser)
    parser.set_defaults(func=cmd_zeta_odd)


def cmd_zeta_odd(args):
    """
    Print zeta(2N+1)
    :param args:
    :return:
    """
    if args.n < 1:
        raise SeriesError("--n must be >= 1, got %d (the N=0 identity is part of verify)" % args.n)
    tol = tolerance_of(args)
    settings = settings_of(args)
    k_terms = fixed_terms(args) or terms_for_scale(tol, TailFamily.LAMBERT, power=-2 * args.n - 1,
                                             max_terms=settings.max_terms)
    params = EvalParams(tol=tol, k_terms=k_terms, guard_delta=settings.guard_delta,
                        compensated=settings.compensated)
    table = shared_table(2 * args.n + 2)

    with stopwatch() as elapsed:
        if args.alpha is None:
            result = zeta_odd(args.n, table, params)
            method = "ramanujan"
        else:
            require_positive(args.alpha, "--alpha")
            result = zeta_odd_general(args.n, ModularPair.from_alpha(args.alpha), table, params)
            method = "ramanujan_modular"
    emit(args, [series_report("zeta", 2 * args.n + 1, result, method, elapsed[0])])
    return 0
