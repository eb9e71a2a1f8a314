""" verify command parser definition """

import logging

from ramanujan_psi.cli.common import emit, settings_of
from ramanujan_psi.report import FORMATS, Report, stopwatch
from ramanujan_psi.series.checks import SUITES, run_suite

LOG = logging.getLogger(__name__)

EXIT_FAILED = 2


def add_parser(subparsers):
    """
    Add command subparser
    :param subparsers:
    :return:
    """
    parser = subparsers.add_parser("verify", help="run identity and equivalence checks")
    parser.add_argument("--suite", choices=SUITES + ("all",), default="all", help="suite to run")
    parser.add_argument("--format", choices=FORMATS, default="json", help="output format")
    parser.set_defaults(func=cmd_verify)


def cmd_verify(args):
    """
    Print one report per check; exit 2 if any check fails
    :param args:
    :return: exit code
    """
    with stopwatch() as elapsed:
        results = run_suite(args.suite, settings_of(args))

    reports = []
    failed = []
    for result in results:
        status = "pass" if result.passed else "fail"
        reports.append(Report(result.name, result.input, float(result.residual), float(result.allowed),
                              result.k_used, result.n_used, "verify", 0, status))
        if not result.passed:
            failed.append(result)
    emit(args, reports)

    LOG.info("%d checks in %.3f s", len(results), elapsed[0] / 1e9)
    for result in failed:
        LOG.error("Check %s(%s) failed: residual %.3g exceeds %.3g",
                  result.name, result.input, result.residual, result.allowed)
    return EXIT_FAILED if failed else 0
