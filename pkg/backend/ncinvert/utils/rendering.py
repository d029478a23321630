"""Canonical JSON, checksums, CSV and report builders for command output."""
import csv
import hashlib
import io
import json
from typing import Any, List, Optional, Sequence

from ..algebra.ncsf import Basis, NcsfElement, to_lambda, to_ribbon
from ..exceptions import BasisError
from ..models import NcsfElementModel, SolveReport
from ..repositories.solution_repository import SolverResult


def canonical_json(data: Any) -> str:
    """Compact JSON with sorted keys; the input to every checksum."""
    return json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def checksum(element: NcsfElement) -> str:
    """SHA-256 of the canonical JSON of an element."""
    return hashlib.sha256(canonical_json(element.to_json()).encode("utf-8")).hexdigest()


def in_basis(element: NcsfElement, basis: str) -> NcsfElement:
    """
    Express an S-basis element in the S, R or L basis.

    Raises:
        BasisError: If the element has zero letters and a non-S basis is asked for
    """
    target = Basis(basis)
    if target is Basis.S:
        return element
    if target is Basis.R:
        return to_ribbon(element)
    return to_lambda(element)


def element_model(element: NcsfElement) -> NcsfElementModel:
    return NcsfElementModel.model_validate(element.to_json())


def solve_report(result: SolverResult, basis: str = "S") -> SolveReport:
    """
    Build the wire report of a solver result.

    Args:
        result: Solver or quotient result
        basis: Output basis, S, R or L

    Returns:
        SolveReport with one component, checksum and text line per degree
    """
    target = Basis(basis)
    if target is not Basis.S and result.letter != "S":
        raise BasisError(f"{result.equation} is written over the letters {result.letter}; use --basis S")
    letter = result.letter if target is Basis.S else None
    components = [in_basis(c, basis) for c in result.components]
    return SolveReport(
        equation=result.equation,
        order=result.order,
        basis=target.value,
        components=[element_model(c) for c in components],
        checksums=[checksum(c) for c in components],
        text=[c.to_text(letter) for c in components],
        normalization=list(result.normalization) if result.normalization is not None else None,
        candidate_normalization=list(result.candidates) if result.candidates is not None else None,
    )


def solve_text(report: SolveReport) -> str:
    """One line per component: '<equation>_<degree> = <element>'."""
    lines = [f"{report.equation}_{degree} = {text}" for degree, text in enumerate(report.text)]
    if report.normalization is not None:
        lines.append(f"normalization exponents: {report.normalization}")
        lines.append(f"printed candidate exponents: {report.candidate_normalization}")
    return "\n".join(lines)


def triangle_csv(rows: Sequence[Sequence[int]], first_row: int = 1, header: Optional[List[str]] = None) -> str:
    """CSV with the row index first, then the row entries."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if header:
        writer.writerow(header)
    for index, row in enumerate(rows, start=first_row):
        writer.writerow([index, *row])
    return buffer.getvalue()
