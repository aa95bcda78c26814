# Copyright (C) 2019-2025 Cognizant Digital Business, Evolutionary AI.
# All Rights Reserved.
# Issued under the Academic Public License.
#
# You can be released from the terms, and requirements of the Academic Public
# License by purchasing a commercial license.
# Purchase of a commercial license is mandatory for any use of the
# rsbeam SDK Software in commercial settings.
#
# END COPYRIGHT
"""
Command line entry point: `rsbeam <subcommand> [flags]`.
"""

import argparse
import logging
import os
import sys

from typing import List

from rsbeam.cli.command_settings import COMMAND_SETTINGS
from rsbeam.cli.settings_resolver import SettingsResolver
from rsbeam.errors.rsbeam_error import RsBeamError
from rsbeam.logging.logging_setup import LoggingSetup


EXIT_REJECTED = 2

# Timing commands pin the numerical libraries to one thread.
# These only take effect before numpy is first imported.
SINGLE_THREAD_ENV = ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS",
                     "VECLIB_MAXIMUM_THREADS", "NUMEXPR_NUM_THREADS")
TIMED_COMMANDS = ("solve", "bench")


def build_parser() -> argparse.ArgumentParser:
    """
    :return: The argparse parser with every subcommand
    """
    parser = argparse.ArgumentParser(prog="rsbeam",
                                     description="Rate-splitting beamforming: FP-HFPI, "
                                                 "the unfolded network and their benchmark")
    parser.add_argument("--config", default=None,
                        help="Config file (.properties, .conf, .hocon, .json or .yaml)")
    parser.add_argument("--log-level", default=None,
                        help="Log level without a logging config (default INFO or $RSBEAM_LOG_LEVEL)")
    parser.add_argument("--log-config", default=None,
                        help="Logging dictConfig file (default $RSBEAM_LOG_CONFIG)")

    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    for command, settings in COMMAND_SETTINGS.items():
        subparser = subparsers.add_parser(command, help=f"{command} subcommand")
        SettingsResolver(command, settings).add_arguments(subparser)
    return parser


def pin_single_thread():
    """
    Sets the thread-count environment of the BLAS backends to 1 unless
    the user already chose a value.
    """
    for name in SINGLE_THREAD_ENV:
        os.environ.setdefault(name, "1")
    if "numpy" in sys.modules:
        logging.getLogger(__name__).debug("numpy already imported; thread pinning may not apply")


def main(argv: List[str] = None) -> int:
    """
    :param argv: The arguments after the program name. Default of None reads sys.argv.
    :return: The process exit status
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    logger = logging.getLogger(__name__)
    try:
        LoggingSetup(log_level=args.log_level, logging_config=args.log_config).setup()
    except (RsBeamError, OSError, ValueError) as exception:
        LoggingSetup(log_level=args.log_level, log_config_env=None).setup()
        logger.error("Cannot set up logging: %s", str(exception))
        return EXIT_REJECTED

    if args.command in TIMED_COMMANDS:
        pin_single_thread()

    try:
        settings = SettingsResolver(args.command, COMMAND_SETTINGS[args.command]).resolve(args, args.config)

        # pylint: disable=import-outside-toplevel
        from rsbeam.cli.commands import COMMANDS
        from rsbeam.progress.logging_progress_reporter import LoggingProgressReporter

        progress = LoggingProgressReporter(source=f"rsbeam.{args.command}")
        return COMMANDS[args.command](settings, progress)

    except (RsBeamError, FileNotFoundError) as exception:
        logger.error("%s: %s", args.command, str(exception))
        return EXIT_REJECTED


if __name__ == "__main__":
    sys.exit(main())
