"""Assembly-related exceptions."""

from src.domain.exceptions.base import DomainException


class AssemblyException(DomainException):
    """Exception raised when the stiffness operator cannot be assembled."""

    def __init__(self, message: str):
        super().__init__(f"Assembly error: {message}")
