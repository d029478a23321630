"""Solvers, quotient formulas and verification suites."""
from .inversion_service import InversionService
from .verification_service import VerificationService

__all__ = ["InversionService", "VerificationService"]
