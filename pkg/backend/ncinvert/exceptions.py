"""Custom exceptions for ncinvert."""
from typing import Optional, Any, Dict


class NcInvertException(Exception):
    """Base exception for all ncinvert errors."""

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None
    ):
        self.message = message
        self.error_code = error_code or self.__class__.__name__
        self.details = details or {}
        super().__init__(self.message)


class ValidationError(NcInvertException):
    """Raised when an argument violates a precondition."""
    pass


class CapExceededError(NcInvertException):
    """Raised when an enumeration or degree cap would be exceeded."""
    pass


class BasisError(NcInvertException):
    """Raised when an element is in the wrong basis or carries zero letters."""
    pass


class NonUnitError(NcInvertException):
    """Raised when inverting a series whose constant term is not a unit."""
    pass


class NotParkingError(NcInvertException):
    """Raised when an input is not a (nondecreasing) parking object."""
    pass


class MalformedPathError(NcInvertException):
    """Raised when a Motzkin path or a tree code is malformed."""
    pass


class VerificationError(NcInvertException):
    """Raised when a verification check fails."""
    pass
