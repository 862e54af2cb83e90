"""Configuration exceptions."""

from src.domain.exceptions.base import DomainException


class ConfigException(DomainException):
    """Exception raised when a scenario file is unreadable or invalid."""

    def __init__(self, message: str):
        super().__init__(f"Configuration error: {message}")
