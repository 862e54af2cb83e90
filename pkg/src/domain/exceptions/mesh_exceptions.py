"""Mesh-related exceptions."""

from pathlib import Path

from src.domain.exceptions.base import DomainException


class MeshGeometryException(DomainException):
    """Exception raised when a triangulation violates a geometric invariant."""

    def __init__(self, message: str):
        super().__init__(f"Mesh geometry error: {message}")


class MeshConfigurationException(DomainException):
    """Exception raised when a mesh generator receives invalid parameters."""

    def __init__(self, message: str):
        super().__init__(f"Mesh configuration error: {message}")


class MeshParseException(DomainException):
    """Exception raised when a Triangle-format file cannot be parsed."""

    def __init__(self, path: Path | str, line_number: int, message: str):
        self.path = Path(path)
        self.line_number = line_number
        super().__init__(f"Mesh parse error in {path} at line {line_number}: {message}")
