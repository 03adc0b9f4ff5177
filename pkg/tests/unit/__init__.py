"""Unit tests for mip-delegate services."""
