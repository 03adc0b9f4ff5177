"""Integration tests for mip-delegate."""
