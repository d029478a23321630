"""Argument parsing, dispatch and exit codes."""
import argparse
import logging
import sys
from typing import List, Optional

from .. import __version__
from ..config import settings
from ..exceptions import NcInvertException, VerificationError
from .commands import COMMANDS

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    """Top-level parser with one subparser per command."""
    parser = argparse.ArgumentParser(
        prog="ncinvert",
        description="Noncommutative Lagrange inversion, parking-function characteristics and their checks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--cap",
        type=int,
        default=None,
        help="Override every degree and enumeration cap for this run (same as NCINVERT_CAP)",
    )
    parser.add_argument(
        "--log-level",
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
        default=None,
        help="Diagnostics level on stderr",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])

    Returns:
        0 on success, 1 when a verification fails, 2 on usage errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    if args.log_level:
        logging.getLogger().setLevel(getattr(logging, args.log_level))

    previous_cap = settings.cap
    if args.cap is not None:
        if args.cap < 0:
            sys.stderr.write("ncinvert: --cap must be >= 0\n")
            return EXIT_USAGE
        settings.apply_cap_override(args.cap)

    try:
        return args.handler(args)
    except VerificationError as e:
        logger.error(f"❌ {e.message}")
        sys.stderr.write(f"ncinvert: {e.message}\n")
        return EXIT_VERIFICATION_FAILED
    except NcInvertException as e:
        logger.debug(f"{e.error_code}: {e.details}")
        sys.stderr.write(f"ncinvert: {e.error_code}: {e.message}\n")
        return EXIT_USAGE
    finally:
        if args.cap is not None:
            settings.apply_cap_override(previous_cap)
