"""specialize: scalar images of the inversion series g."""
import json
import logging

from ...algebra.ncsf import specialize_one
from ...dependencies import get_inversion_service
from ...exceptions import ValidationError
from ...services.inversion_service import generalized_binomial, generalized_exponential
from ..common import add_format_argument, emit

logger = logging.getLogger(__name__)

NAME = "specialize"
KINDS = ("one", "exp", "binomial", "gen-exp", "gen-binomial")


def register(subparsers) -> None:
    parser = subparsers.add_parser(NAME, help="Coefficients of a scalar specialization of g")
    parser.add_argument(
        "--kind",
        choices=KINDS,
        required=True,
        help="one: A=1; exp: A=t𝔼; binomial: A=zα; gen-exp: ℰ_α; gen-binomial: ℬ_α",
    )
    parser.add_argument("--degree", type=int, required=True, help="Truncation order")
    parser.add_argument("--alpha", type=int, default=1, help="Parameter α")
    add_format_argument(parser)
    parser.set_defaults(handler=run)


def coefficients(kind: str, degree: int, alpha: int) -> list:
    """
    Series coefficients through the given degree.

    Raises:
        ValidationError: On a negative degree
    """
    if degree < 0:
        raise ValidationError(f"--degree must be >= 0, got {degree}")
    service = get_inversion_service()
    if kind == "one":
        g = service.solve_g(degree)
        return [specialize_one(g[n]).constant_term() for n in range(degree + 1)]
    if kind == "exp":
        return service.exponential_series(degree)
    if kind == "binomial":
        return service.binomial_series(alpha, degree)
    if kind == "gen-exp":
        return generalized_exponential(alpha, degree)
    return generalized_binomial(alpha, degree)


def run(args) -> int:
    values = coefficients(args.kind, args.degree, args.alpha)
    rendered = [str(v) for v in values]
    if args.format == "json":
        emit(json.dumps({"kind": args.kind, "alpha": args.alpha, "coefficients": rendered}, indent=2))
    else:
        emit(" ".join(rendered))
    return 0
