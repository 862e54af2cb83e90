"""Base domain exception."""


class DomainException(Exception):
    """Base exception for all simulator domain errors."""

    def __init__(self, message: str):
        self.message = message
        super().__init__(self.message)
