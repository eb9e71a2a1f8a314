""" Helpers shared by the commands """

import logging
from dataclasses import replace

from ramanujan_psi.config import Settings
from ramanujan_psi.planner import plan
from ramanujan_psi.report import FORMATS, Report, render
from ramanujan_psi.series import SeriesError

LOG = logging.getLogger(__name__)


def add_common_arguments(parser, terms=True):
    """
    Add --tol, --terms and --format
    :param parser: argparse parser
    :param terms: offer --terms
    :return:
    """
    parser.add_argument("--tol", type=float, default=None,
                        help="target absolute error (default: settings tolerance)")
    if terms:
        parser.add_argument("--terms", type=int, default=None,
                            help="number of k terms, overrides the planner")
    parser.add_argument("--format", choices=FORMATS, default="json", help="output format")


def settings_of(args):
    """
    Settings attached by main(), defaults otherwise
    :param args:
    :return: Settings
    """
    return getattr(args, "settings", None) or Settings()


def tolerance_of(args):
    """
    Requested tolerance or the configured one, validated like the settings
    :param args:
    :return: float
    """
    return settings_of(args).override(tolerance=args.tol).tolerance


def fixed_terms(args, default=None):
    """
    Validated --terms, or the default when it is not given
    :param args:
    :param default: value without --terms
    :return: int or None
    """
    terms = getattr(args, "terms", None)
    if terms is None:
        return default
    if terms < 1:
        raise SeriesError("--terms must be >= 1, got %d" % terms)
    return terms


def params_for(args, x):
    """
    Plan term counts for x, then apply --terms
    :param args:
    :param x: evaluation point
    :return: EvalParams
    """
    params = plan(tolerance_of(args), x, settings_of(args))
    terms = fixed_terms(args)
    if terms is not None:
        LOG.info("Using %d k terms instead of the planned %d", terms, params.k_terms)
        params = replace(params, k_terms=terms, s_terms=None)
    return params


def require_positive(value, flag):
    """
    Reject a non-positive command line value
    :param value: parsed value
    :param flag: flag name for the message
    :return:
    """
    if not value > 0:
        raise SeriesError("%s must be > 0 (x > 0 is required), got %r" % (flag, value))


def series_report(quantity, value_in, result, method, elapsed):
    """
    Build a report from a SeriesValue
    :param quantity: name
    :param value_in: input
    :type result: ramanujan_psi.series.SeriesValue
    :param method: method name
    :param elapsed: nanoseconds
    :return: Report
    """
    return Report(quantity, value_in, result.value, result.error_estimate, result.k_used, result.n_used,
                  method, elapsed)


def emit(args, reports):
    """
    Print reports in the requested format
    :param args:
    :param reports: list of Report
    :return:
    """
    print(render(reports, args.format))
