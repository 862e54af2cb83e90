"""Infrastructure layer module."""

