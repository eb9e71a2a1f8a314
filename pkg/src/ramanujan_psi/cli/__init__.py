""" Load command interpreter """

import ramanujan_psi.cli.bench
import ramanujan_psi.cli.gamma
import ramanujan_psi.cli.identities
import ramanujan_psi.cli.psi
import ramanujan_psi.cli.psi_prime
import ramanujan_psi.cli.verify
import ramanujan_psi.cli.zeta_odd


def add_parsers(subparsers):
    """
    Add command parser to argument parser
    :param subparsers: argparse subparsers
    :return:
    """
    ramanujan_psi.cli.bench.add_parser(subparsers)
    ramanujan_psi.cli.gamma.add_parser(subparsers)
    ramanujan_psi.cli.identities.add_parser(subparsers)
    ramanujan_psi.cli.psi.add_parser(subparsers)
    ramanujan_psi.cli.psi_prime.add_parser(subparsers)
    ramanujan_psi.cli.verify.add_parser(subparsers)
    ramanujan_psi.cli.zeta_odd.add_parser(subparsers)
