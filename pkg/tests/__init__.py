"""Test package for mip-delegate."""
