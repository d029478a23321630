"""solve: truncated solutions of the inversion equations and the quotient formulas."""
import logging

from ...dependencies import get_inversion_service
from ...exceptions import ValidationError
from ...utils.rendering import solve_report, solve_text
from ..common import add_basis_argument, add_format_argument, emit

logger = logging.getLogger(__name__)

NAME = "solve"


def register(subparsers) -> None:
    parser = subparsers.add_parser(NAME, help="Solve an inversion equation to a given degree")
    parser.add_argument(
        "--eq",
        required=True,
        help="g, h, f0, K, b=B, G (quotient formula, with --r) or kl (with --k, --l, optional --r, --q)",
    )
    parser.add_argument("--degree", type=int, required=True, help="Truncation order")
    parser.add_argument("--r", type=int, default=None, help="Auxiliary parameter of the quotient formulas")
    parser.add_argument("--k", type=int, default=None, help="Slope of the (k,l) family")
    parser.add_argument("--l", type=int, default=None, help="Offset of the (k,l) family")
    parser.add_argument("--q", action="store_true", help="Keep q in the (k,l) quotient formula")
    add_basis_argument(parser)
    add_format_argument(parser)
    parser.set_defaults(handler=run)


def run(args) -> int:
    """
    Print the components of the requested series.

    Returns:
        Exit code 0

    Raises:
        ValidationError: If the quotient parameters are missing
    """
    service = get_inversion_service()
    eq = args.eq.strip()
    if eq == "G":
        result = service.quotient_g(args.r if args.r is not None else 1, args.degree)
    elif eq == "kl":
        if args.k is None or args.l is None:
            raise ValidationError("--eq kl needs --k and --l")
        result = service.quotient_kl(args.k, args.l, args.degree, r=args.r, q_mode=args.q)
    else:
        result = service.solve(eq, args.degree)

    report = solve_report(result, args.basis)
    if args.format == "json":
        emit(report.model_dump_json(indent=2))
    else:
        emit(solve_text(report))
    return 0
