"""Shared fixtures."""

import numpy as np
import pytest

from src.services.env_catalog import builtin_env


@pytest.fixture
def steel():
    """The steel-plate crafting environment."""
    return builtin_env("steel-plate")


@pytest.fixture
def rng():
    return np.random.default_rng(0)

