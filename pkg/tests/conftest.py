"""Pytest configuration and fixtures."""

import sys
from pathlib import Path

import pytest

# Add src to path so tests can import the finecat package
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from finecat import core  # noqa: E402


@pytest.fixture
def catalan_prefix():
    """C_0, C_1, ..., C_9 as a 1-indexed sequence (f_1)."""
    return core.catalan_sequence(10)


@pytest.fixture
def fine_prefix():
    """Fine numbers F_1..F_10."""
    return core.fine_sequence(10)


@pytest.fixture(scope="session")
def tower():
    """f_0..f_4, 20 terms each."""
    return core.fine_tower(20)


@pytest.fixture
def known_rows():
    """Rows 1..3 of G_1..G_4."""
    return {
        1: [(1,), (0, 1), (1, 0, 1)],
        2: [(1,), (1, 1), (2, 2, 1)],
        3: [(1,), (2, 1), (5, 4, 1)],
        4: [(1,), (3, 1), (10, 6, 1)],
    }
