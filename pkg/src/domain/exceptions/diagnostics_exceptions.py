"""Diagnostics-related exceptions."""

from src.domain.exceptions.base import DomainException


class DiagnosticsDomainException(DomainException):
    """Exception raised when a metric is evaluated outside its domain."""

    def __init__(self, message: str):
        super().__init__(f"Diagnostics domain error: {message}")


class QuadratureException(DomainException):
    """Exception raised when adaptive quadrature fails to reach its tolerance."""

    def __init__(self, message: str):
        super().__init__(f"Quadrature error: {message}")


class EmptySupportException(DomainException):
    """Exception raised when no triangle lies above the support threshold."""

    def __init__(self, threshold: float):
        super().__init__(f"Empty support: no triangle above threshold {threshold:.3e}")
