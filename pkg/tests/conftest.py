"""Shared fixtures and helpers."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

TESTS_DIR = Path(__file__).parent
DATA_DIR = TESTS_DIR / "data"

# make `import reference` work from any test module
sys.path.insert(0, str(TESTS_DIR))


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def one_way_gain_text() -> str:
    return (DATA_DIR / "one_way_gain.qc").read_text()


@pytest.fixture
def greedy_gap_text() -> str:
    return (DATA_DIR / "greedy_gap.qc").read_text()
