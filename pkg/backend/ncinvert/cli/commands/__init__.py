"""Subcommands; each module provides register(subparsers) and run(args)."""
from . import abel, char, gamma, solve, specialize, triangle, verify

COMMANDS = (char, solve, abel, triangle, gamma, verify, specialize)

__all__ = ["COMMANDS"]
