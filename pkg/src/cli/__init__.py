"""Command-line interface for mip-delegate."""

from .main import cli, main

__all__ = ["cli", "main"]
