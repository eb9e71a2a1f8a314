""" Ramanujan-psi main module """

import argparse
import logging
import sys

from ramanujan_psi.cli import add_parsers
from ramanujan_psi.config import load_settings
from ramanujan_psi.errors import RamanujanPsiError
from ramanujan_psi.oracles import OracleToleranceError
from ramanujan_psi.planner import ToleranceError
from ramanujan_psi.series import ConsistencyError

LOG = logging.getLogger('ramanujan-psi')

EXIT_INPUT = 1
EXIT_TOLERANCE = 3


class ArgumentParser(argparse.ArgumentParser):
    """ Report usage errors with the input-error exit code """

    def error(self, message):
        self.print_usage(sys.stderr)
        LOG.error(message)
        sys.exit(EXIT_INPUT)


def main(argv=None):
    """
    Main entry point
    :param argv: arguments (default: sys.argv)
    :return:
    """
    parser = ArgumentParser(prog='ramanujan')
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    parser.add_argument('-d', '--debug', action='store_true', help='loglevel: debug')
    parser.add_argument('-v', '--verbose', action='store_true', help='loglevel: info')
    parser.add_argument('-c', '--config', default=None,
                        help='settings file (default: ramanujan.yaml if present)')

    # add command parser
    add_parsers(subparsers)

    args = parser.parse_args(argv)

    # set log level
    if args.verbose:
        LOG.setLevel(logging.INFO)
        logging.basicConfig(level=logging.INFO)
    elif args.debug:
        LOG.setLevel(logging.DEBUG)
        logging.basicConfig(level=logging.DEBUG)
    else:
        logging.basicConfig(level=logging.WARNING)

    try:
        args.settings = load_settings(args.config)
        return_code = args.func(args)
    except (ToleranceError, ConsistencyError, OracleToleranceError) as err:
        LOG.error(err)
        sys.exit(EXIT_TOLERANCE)
    except RamanujanPsiError as err:
        LOG.error(err)
        sys.exit(EXIT_INPUT)

    sys.exit(return_code or 0)
