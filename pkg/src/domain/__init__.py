"""Domain layer module."""

