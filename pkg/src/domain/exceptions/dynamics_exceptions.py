"""Dynamics-related exceptions."""

from src.domain.exceptions.base import DomainException


class PositivityException(DomainException):
    """Exception raised when the conductivity update loses positivity."""

    def __init__(self, message: str):
        super().__init__(f"Positivity lost: {message}")
