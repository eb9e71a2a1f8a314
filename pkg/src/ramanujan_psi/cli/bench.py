""" bench command parser definition """

import logging

from ramanujan_psi.cli.common import emit, require_positive, settings_of
from ramanujan_psi.oracles import OracleConfig, classical_psi
from ramanujan_psi.planner import plan
from ramanujan_psi.report import FORMATS, Report, stopwatch
from ramanujan_psi.series import GuardBandError, in_guard_band
from ramanujan_psi.series.psi import psi_ramanujan

LOG = logging.getLogger(__name__)

DEFAULT_TOLERANCES = (1e-3, 1e-6, 1e-9, 1e-12)


def add_parser(subparsers):
    """
    Add command subparser
    :param subparsers:
    :return:
    """
    parser = subparsers.add_parser("bench", help="compare the hyperbolic series with the classical series")
    parser.add_argument("--x", type=float, required=True, help="argument, x > 0 away from integers")
    parser.add_argument("--tol", type=float, nargs="+", default=list(DEFAULT_TOLERANCES),
                        help="tolerances to benchmark")
    parser.add_argument("--format", choices=FORMATS, default="plain", help="output format")
    parser.set_defaults(func=cmd_bench)


def cmd_bench(args):
    """
    Print terms and wall time per tolerance for both methods
    :param args:
    :return:
    """
    require_positive(args.x, "--x")
    settings = settings_of(args)
    nearest = in_guard_band(args.x, settings.guard_delta)
    if nearest is not None:
        raise GuardBandError(args.x, nearest, settings.guard_delta)
    cfg = OracleConfig.from_settings(settings)

    reports = []
    for tol in args.tol:
        params = plan(tol, args.x, settings)
        with stopwatch() as elapsed:
            result = psi_ramanujan(args.x, params)
        reports.append(Report("psi", args.x, result.value, result.error_estimate, result.k_used,
                              result.n_used, "ramanujan", elapsed[0]))

        with stopwatch() as elapsed:
            baseline = classical_psi(args.x, tol, settings.classical_cap, settings.compensated, cfg)
        reports.append(Report("psi", args.x, baseline.value, baseline.tail_bound, 0, baseline.terms,
                              "classical", elapsed[0], "capped" if baseline.capped else "ok"))
        LOG.info("tol=%g: %d k terms against %d classical terms", tol, result.k_used, baseline.terms)

    emit(args, reports)
    return 0
