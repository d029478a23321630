"""abel: noncommutative Abel polynomials."""
import json
import logging
from fractions import Fraction

from ...dependencies import get_inversion_service
from ...exceptions import ValidationError
from ...utils.rendering import element_model
from ..common import add_format_argument, emit

logger = logging.getLogger(__name__)

NAME = "abel"


def register(subparsers) -> None:
    parser = subparsers.add_parser(NAME, help="Abel polynomial P_n(x;A), the degree-n term of g^x")
    parser.add_argument("--n", type=int, required=True, help="Degree")
    parser.add_argument("--x", default=None, help="Evaluate at this rational value of x")
    parser.add_argument("--at-one", action="store_true", help="Print P_n(x;1) computed three ways")
    add_format_argument(parser)
    parser.set_defaults(handler=run)


def _at_one(service, n: int, output_format: str) -> str:
    values = {
        "direct": service.abel_one_direct(n),
        "triangle": service.abel_one_via_triangle(n),
        "closed_form": service.abel_one_closed_form(n),
    }
    agree = len(set(values.values())) == 1
    if not agree:
        logger.warning(f"⚠️  P_{n}(x;1) computations disagree")
    if output_format == "json":
        payload = {"n": n, "agree": agree, "values": {name: v.to_json() for name, v in values.items()}}
        return json.dumps(payload, indent=2, sort_keys=True)
    return "\n".join(f"{name}: {value}" for name, value in values.items())


def run(args) -> int:
    """
    Print P_n(x;A), its value at a given x, or its A = 1 image.

    Raises:
        ValidationError: If --x is not a rational number
    """
    service = get_inversion_service()
    if args.at_one:
        emit(_at_one(service, args.n, args.format))
        return 0

    element = service.abel_polynomial(args.n)
    if args.x is not None:
        try:
            value = Fraction(args.x)
        except (ValueError, ZeroDivisionError):
            raise ValidationError(f"--x must be a rational number, got {args.x!r}")
        element = element.eval_x(value)
    if args.format == "json":
        emit(element_model(element).model_dump_json(indent=2))
    else:
        emit(element.to_text())
    return 0
