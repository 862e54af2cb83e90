"""Forcing-related exceptions."""

from src.domain.exceptions.base import DomainException


class ForcingBalanceException(DomainException):
    """Exception raised when a load vector cannot be mass balanced."""

    def __init__(self, message: str):
        super().__init__(f"Forcing balance error: {message}")


class ForcingDomainException(DomainException):
    """Exception raised when a point source lies outside the mesh."""

    def __init__(self, message: str):
        super().__init__(f"Forcing domain error: {message}")
