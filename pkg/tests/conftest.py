import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make oracles importable

from symchar import character_table


@lru_cache(maxsize=None)
def _shared_table(n: int):
    return character_table(n)


@pytest.fixture
def table_for():
    """Session-shared character tables; the MN memo makes rebuilds cheap."""
    return _shared_table
