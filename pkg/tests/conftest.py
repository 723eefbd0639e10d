"""
Shared fixtures: project root on the import path and pristine settings per test.
"""

import sys
from pathlib import Path

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from config.settings import reset_settings  # noqa: E402


@pytest.fixture(autouse=True)
def pristine_settings():
    """Every test starts from the documented defaults."""
    yield reset_settings()
    reset_settings()
