"""Helpers shared by the subcommands."""
import sys
from typing import Optional

from ..algebra.comp import Composition
from ..exceptions import ValidationError


def emit(text: str) -> None:
    """Write a result to stdout, newline-terminated."""
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def add_format_argument(parser, choices=("text", "json"), default: str = "text") -> None:
    parser.add_argument("--format", choices=choices, default=default, help=f"Output format (default: {default})")


def add_basis_argument(parser) -> None:
    parser.add_argument("--basis", choices=("S", "R", "L"), default="S", help="Output basis (L is Λ)")


def parse_composition(text: Optional[str]) -> tuple:
    """
    Parse a composition flag such as '3,3,1' or '331'.

    Raises:
        ValidationError: If the flag is missing or empty
    """
    if text is None:
        raise ValidationError("A composition is required, e.g. --composition 3,3,1")
    parts = Composition.parse(text).parts
    if not parts:
        raise ValidationError("The composition must be nonempty")
    return parts
