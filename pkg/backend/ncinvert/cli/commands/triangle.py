"""triangle: γ^(b), Motzkin returns, row sums and the c(n,k) triangle."""
import logging

from ...combinatorics import trees
from ...exceptions import ValidationError
from ...models import TriangleReport
from ...services.inversion_service import catalan_triangle_c
from ...utils.rendering import triangle_csv
from ..common import add_format_argument, emit

logger = logging.getLogger(__name__)

NAME = "triangle"
KINDS = ("gamma", "motzkin", "rowsums", "catalan-c")
FIRST_ROW = {"gamma": 1, "motzkin": 0, "rowsums": 0, "catalan-c": 1}


def register(subparsers) -> None:
    parser = subparsers.add_parser(NAME, help="Print a combinatorial triangle")
    parser.add_argument("--kind", choices=KINDS, default="gamma", help="Which triangle (default: gamma)")
    parser.add_argument("--b", type=int, default=0, help="Arity offset for gamma and rowsums")
    parser.add_argument("--rows", type=int, default=7, help="Number of rows")
    add_format_argument(parser, choices=("csv", "json", "text"), default="csv")
    parser.set_defaults(handler=run)


def build(kind: str, b: int, rows: int) -> TriangleReport:
    """
    Compute a triangle.

    Raises:
        ValidationError: On a negative row count
    """
    if rows < 0:
        raise ValidationError(f"--rows must be >= 0, got {rows}")
    if kind == "gamma":
        return TriangleReport(name=f"gamma(b={b})", rows=trees.gamma_triangle(b, rows))
    if kind == "motzkin":
        return TriangleReport(name="motzkin-returns", rows=trees.motzkin_returns_triangle(rows))
    if kind == "rowsums":
        return TriangleReport(name=f"row-sums(b={b})", rows=[[value] for value in trees.row_sum_series(b, rows)])
    table = [[catalan_triangle_c(n, k) for k in range(1, n + 1)] for n in range(1, rows + 1)]
    return TriangleReport(name="catalan-c", rows=table)


def run(args) -> int:
    """Print the triangle; CSV rows start with their index n."""
    report = build(args.kind, args.b, args.rows)
    if args.format == "json":
        emit(report.model_dump_json(indent=2))
    elif args.format == "csv":
        emit(triangle_csv(report.rows, first_row=FIRST_ROW[args.kind]))
    else:
        emit("\n".join(" ".join(map(str, row)) for row in report.rows))
    return 0
