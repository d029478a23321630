"""char: q-characteristics of parking-function families."""
import logging

from ...combinatorics.parking import ParkingFamily
from ...dependencies import get_inversion_service
from ...utils.rendering import element_model, in_basis
from ..common import add_basis_argument, add_format_argument, emit

logger = logging.getLogger(__name__)

NAME = "char"


def register(subparsers) -> None:
    parser = subparsers.add_parser(NAME, help="Characteristic of a parking-function family")
    parser.add_argument("--family", default="classic", help="classic, r=R or k,l=K,L")
    parser.add_argument("--n", type=int, required=True, help="Word length")
    parser.add_argument("--q", action="store_true", help="Keep the q-statistic")
    add_basis_argument(parser)
    add_format_argument(parser)
    parser.set_defaults(handler=run)


def run(args) -> int:
    """
    Print ch_q(PF_n) of the family, or its q = 1 image.

    Returns:
        Exit code 0
    """
    family = ParkingFamily.parse(args.family)
    service = get_inversion_service()
    logger.info(f"🔄 Characteristic of {family.label()} at n={args.n}")
    element = in_basis(service.characteristic(family, args.n, keep_q=args.q), args.basis)
    if args.format == "json":
        emit(element_model(element).model_dump_json(indent=2))
    else:
        emit(element.to_text())
    return 0
