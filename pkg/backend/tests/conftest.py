"""Pytest configuration and fixtures."""
import pytest

from ncinvert import tables
from ncinvert.config import settings
from ncinvert.dependencies import reset_singletons
from ncinvert.repositories import SolutionRepository
from ncinvert.services import InversionService, VerificationService


@pytest.fixture(autouse=True)
def reset_settings():
    """Clear cap overrides and singletons around every test."""
    previous = settings.cap
    settings.apply_cap_override(None)
    reset_singletons()
    yield
    settings.apply_cap_override(previous)
    reset_singletons()


@pytest.fixture
def solution_repository():
    """Fresh in-memory solution repository."""
    return SolutionRepository()


@pytest.fixture
def inversion_service(solution_repository):
    """Inversion service over a fresh repository."""
    return InversionService(solution_repository)


@pytest.fixture
def verification_service(inversion_service):
    """Verification service sharing the inversion service fixture."""
    return VerificationService(inversion_service)


@pytest.fixture(scope="session")
def solved_g():
    """g solved through degree 6."""
    return InversionService(SolutionRepository()).solve_g(6)


@pytest.fixture
def golden():
    """Published reference tables."""
    return tables
