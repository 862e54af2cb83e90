"""Application layer module."""

