"""Shared test fixtures for homkit tests.

This module provides reusable fixtures for the worked examples:

- Fields: Q, GF(3), GF(5)
- H4 and its pieces (k[a]/(a²), the action, σ_t) over Q
- Environment fixtures for the configuration variables
"""

from __future__ import annotations

import os
import sys
from unittest.mock import patch

import pytest

# Import from the src directory
sys.path.insert(0, "src")

import corpus  # noqa: E402
from exactlin import FieldSpec  # noqa: E402

# =============================================================================
# FIELDS
# =============================================================================


@pytest.fixture
def qq() -> FieldSpec:
    return FieldSpec.rationals()


@pytest.fixture
def gf3() -> FieldSpec:
    return FieldSpec.prime(3)


@pytest.fixture
def gf5() -> FieldSpec:
    return FieldSpec.prime(5)


# =============================================================================
# WORKED EXAMPLES
# =============================================================================


@pytest.fixture
def h4():
    """H4 over Q."""
    return corpus.h4()


@pytest.fixture
def kaa():
    return corpus.kaa()


@pytest.fixture
def action_h4():
    """The weak action of H4 on k[a]/(a²) over Q."""
    return corpus.action_h4()


@pytest.fixture
def sigma_1():
    """σ_t at t = 1 with values in k[a]/(a²)."""
    return corpus.sigma_t(1)


@pytest.fixture
def scalar_sigma_1():
    """σ_t at t = 1 as a scalar cocycle on H4."""
    return corpus.scalar_sigma_t(1)


# =============================================================================
# ENVIRONMENT
# =============================================================================


@pytest.fixture
def clean_env():
    """Clear every HOMKIT_* variable for the duration of a test.

    Yields:
        The cleared environment mapping.
    """
    env = {k: v for k, v in os.environ.items() if not k.startswith("HOMKIT_")}
    with patch.dict(os.environ, env, clear=True):
        yield env


# =============================================================================
# TEST MARKERS CONFIGURATION
# =============================================================================


def pytest_configure(config):
    """Configure custom pytest markers.

    Registers markers for categorizing tests:
    - unit: Tests of a single module
    - integration: End-to-end CLI and worked-example tests
    - slow: Exhaustive enumerations
    - smoke: Critical path smoke tests
    """
    config.addinivalue_line("markers", "unit: Tests of a single module")
    config.addinivalue_line("markers", "integration: End-to-end CLI and worked-example tests")
    config.addinivalue_line("markers", "slow: Slow-running tests")
    config.addinivalue_line("markers", "smoke: Critical path smoke tests")
