"""Service providers shared by the command line and the tests."""
import logging
from functools import lru_cache
from typing import Optional

from .repositories import SolutionRepository
from .services import InversionService, VerificationService

logger = logging.getLogger(__name__)


# Singletons
_solution_repository: Optional[SolutionRepository] = None
_inversion_service: Optional[InversionService] = None


@lru_cache()
def get_solution_repository() -> SolutionRepository:
    """
    Get solution repository (singleton).

    Returns:
        SolutionRepository instance
    """
    global _solution_repository

    if _solution_repository is None:
        logger.debug("Initializing solution repository...")
        _solution_repository = SolutionRepository()
        logger.debug("✅ Solution repository initialized")

    return _solution_repository


def get_inversion_service() -> InversionService:
    """
    Get inversion service (singleton).

    Returns:
        InversionService instance sharing the solution repository
    """
    global _inversion_service

    if _inversion_service is None:
        logger.debug("Initializing inversion service...")
        _inversion_service = InversionService(get_solution_repository())
        logger.debug("✅ Inversion service initialized")

    return _inversion_service


def get_verification_service() -> VerificationService:
    """
    Get verification service.

    Returns:
        VerificationService instance
    """
    logger.debug("Creating verification service...")
    return VerificationService(get_inversion_service())


def reset_singletons() -> None:
    """Reset all singletons (useful for testing)."""
    global _solution_repository, _inversion_service

    _solution_repository = None
    _inversion_service = None

    get_solution_repository.cache_clear()

    logger.debug("✅ All singletons reset")
