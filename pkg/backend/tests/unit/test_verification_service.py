"""Unit tests for the verification service."""
import pytest

from ncinvert.exceptions import ValidationError
from ncinvert.config import settings
from ncinvert.services.verification_service import (
    ABEL_AT_ONE_DEGREE,
    CHECKS,
    CHECKS_BY_NAME,
    SUITES,
    VerificationService,
    check_abel,
)


def test_registry():
    """Test that every check belongs to a known suite and names are unique."""
    assert len(CHECKS_BY_NAME) == len(CHECKS)
    assert {check.suite for check in CHECKS} == set(SUITES)


def test_select():
    """Test suite selection in registry order."""
    involutions = VerificationService.select("involutions")
    assert [check.name for check in involutions] == ["iota", "gamma_graphs", "gamma_isomorphisms"]
    assert len(VerificationService.select("all")) == len(CHECKS)
    with pytest.raises(ValidationError, match="Unknown suite"):
        VerificationService.select("everything")


def test_degree_zero_passes(verification_service):
    """Test that every check passes at max_degree 0."""
    report = verification_service.run("all", max_degree=0)
    assert report.passed, [c.failures for c in report.checks if not c.passed]
    assert [c.name for c in report.checks] == [check.name for check in CHECKS]
    assert report.jobs == 1


def test_published_values_suite_small(verification_service):
    """Test the reference-table suite through degree 3."""
    report = verification_service.run("paper-tables", max_degree=3)
    assert report.passed, [c.failures for c in report.checks if not c.passed]
    assert report.suite == "paper-tables"
    assert report.max_degree == 3


def test_involutions_small(verification_service):
    """Test the involution suite through weight 4."""
    report = verification_service.run("involutions", max_degree=4)
    assert report.passed
    assert all(check.seconds >= 0 for check in report.checks)


def test_oracles_small(verification_service):
    """Test the oracle suite through degree 3."""
    report = verification_service.run("oracles", max_degree=3)
    assert report.passed, [c.failures for c in report.checks if not c.passed]


def test_cap_errors_become_failures(verification_service):
    """Test that a cap hit inside a check is reported, not raised."""
    from ncinvert.config import settings

    settings.apply_cap_override(1)
    report = verification_service.run("paper-tables", max_degree=3)
    assert not report.passed
    failed = [c for c in report.checks if not c.passed]
    assert any(c.detail == "raised" for c in failed)
    assert any("max_degree" in f for c in failed for f in c.failures)


def test_run_arguments(verification_service):
    """Test rejected degrees and job counts."""
    with pytest.raises(ValidationError):
        verification_service.run("all", max_degree=-1)
    with pytest.raises(ValidationError):
        verification_service.run("all", max_degree=0, jobs=0)


def test_abel_check_reaches_degree_ten(inversion_service, solution_repository):
    """Test that the A = 1 comparison runs to degree 10 under the default caps."""
    before = settings.max_degree
    assert check_abel(inversion_service, ABEL_AT_ONE_DEGREE) == []
    assert solution_repository.get_any(("g",)).order >= ABEL_AT_ONE_DEGREE
    assert settings.max_degree == before
