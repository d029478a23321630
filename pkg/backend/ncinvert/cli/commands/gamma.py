"""gamma: the graph Γ_I, ι and the isomorphism certificate."""
import logging

from ...combinatorics import pgraph
from ...exceptions import VerificationError
from ..common import add_format_argument, emit, parse_composition

logger = logging.getLogger(__name__)

NAME = "gamma"


def register(subparsers) -> None:
    parser = subparsers.add_parser(NAME, help="Γ_I as DOT, or the certificate Γ_I ≅ Γ_(I~)")
    parser.add_argument("--composition", required=True, help="The composition I, e.g. 3,3,1")
    parser.add_argument("--certificate", action="store_true", help="Check ι: Γ_I -> Γ_(I~) and print the certificate")
    add_format_argument(parser, choices=("dot", "json"), default="dot")
    parser.set_defaults(handler=run)


def run(args) -> int:
    """
    Print Γ_I, or the isomorphism certificate.

    Raises:
        VerificationError: If the certificate check fails
    """
    parts = parse_composition(args.composition)
    if not args.certificate:
        graph = pgraph.GammaGraph(parts)
        if args.format == "json":
            emit(pgraph.graph_json(graph))
        else:
            emit(graph.to_dot())
        return 0

    certificate = pgraph.check_gamma_isomorphism(parts)
    emit(certificate.model_dump_json(indent=2))
    if not certificate.passed:
        raise VerificationError(
            f"ι is not an isomorphism Γ{parts} -> Γ{tuple(certificate.conjugate)}",
            details={"failures": certificate.failures},
        )
    return 0
