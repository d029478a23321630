"""Unit tests for report rendering."""
import json

import pytest

from ncinvert.algebra.ncsf import to_lambda, to_ribbon
from ncinvert.exceptions import BasisError
from ncinvert.utils.rendering import (
    canonical_json,
    checksum,
    in_basis,
    solve_report,
    solve_text,
    triangle_csv,
)


def test_canonical_json():
    """Test sorted keys and compact separators."""
    assert canonical_json({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'


def test_checksum_is_stable(solved_g):
    """Test that equal elements share a checksum."""
    first = checksum(solved_g[3])
    assert first == checksum(solved_g.truncated(3)[3])
    assert len(first) == 64
    assert first != checksum(solved_g[2])


def test_in_basis(solved_g):
    """Test S, R and L output."""
    assert in_basis(solved_g[3], "S") is solved_g[3]
    assert in_basis(solved_g[3], "R") == to_ribbon(solved_g[3])
    assert in_basis(solved_g[3], "L") == to_lambda(solved_g[3])


def test_solve_report(inversion_service):
    """Test the report of g through degree 2."""
    report = solve_report(inversion_service.solve_g(2))
    assert report.equation == "g"
    assert report.order == 2
    assert len(report.components) == len(report.checksums) == 3
    assert report.text[1] == "S[1]"
    assert report.normalization is None
    lines = solve_text(report).splitlines()
    assert lines[0] == "g_0 = 1"
    assert lines[2].startswith("g_2 = ")


def test_solve_report_round_trips_through_json(inversion_service):
    """Test that the report serializes to plain JSON."""
    report = solve_report(inversion_service.solve_g(2), basis="R")
    data = json.loads(report.model_dump_json())
    assert data["basis"] == "R"
    assert data["components"][2]["basis"] == "R"


def test_solve_report_q_mode(inversion_service):
    """Test normalization lines in the text form."""
    report = solve_report(inversion_service.quotient_kl(3, 2, 2, q_mode=True))
    assert report.normalization == [0, 3, 9]
    assert report.candidate_normalization == [0, 8, 25]
    assert "normalization exponents: [0, 3, 9]" in solve_text(report)


def test_solve_report_rejects_basis_change_on_d_letters(inversion_service):
    """Test that d-word results stay in their own letters."""
    result = inversion_service.solve_b_family(1, 2)
    assert solve_report(result).text[1] == "d[1]"
    with pytest.raises(BasisError):
        solve_report(result, basis="R")


def test_triangle_csv():
    """Test CSV rows with a header and the row index first."""
    text = triangle_csv([[1], [1, 1]], header=["n", "k1", "k2"])
    assert text == "n,k1,k2\n1,1\n2,1,1\n"
    assert triangle_csv([[1]], first_row=0) == "0,1\n"
