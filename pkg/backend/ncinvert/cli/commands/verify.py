"""verify: run the verification suites."""
import logging

from ...dependencies import get_verification_service
from ...exceptions import VerificationError
from ...services.verification_service import SUITES
from ..common import add_format_argument, emit

logger = logging.getLogger(__name__)

NAME = "verify"


def register(subparsers) -> None:
    parser = subparsers.add_parser(NAME, help="Run the verification suites")
    parser.add_argument("--suite", choices=("all",) + SUITES, default="all", help="Suite to run (default: all)")
    parser.add_argument("--max-degree", type=int, default=None, help="Upper bound for every check's ranges")
    parser.add_argument("--jobs", type=int, default=None, help="Worker processes (default: 1)")
    add_format_argument(parser, default="json")
    parser.set_defaults(handler=run)


def _text(report) -> str:
    lines = []
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        lines.append(f"{status} {check.suite}/{check.name} {check.seconds:.3f}s")
        lines.extend(f"    {failure}" for failure in check.failures)
    passed = sum(check.passed for check in report.checks)
    lines.append(f"{passed}/{len(report.checks)} checks passed in {report.total_seconds:.3f}s")
    return "\n".join(lines)


def run(args) -> int:
    """
    Print the report.

    Raises:
        VerificationError: If any check failed (after the report is printed)
    """
    report = get_verification_service().run(args.suite, args.max_degree, args.jobs)
    if args.format == "json":
        emit(report.model_dump_json(indent=2))
    else:
        emit(_text(report))
    if not report.passed:
        failed = [check.name for check in report.checks if not check.passed]
        raise VerificationError(f"{len(failed)} check(s) failed: {', '.join(failed)}", details={"failed": failed})
    return 0
