import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import cfg  # noqa: E402


@pytest.fixture
def ex31():
    return cfg(3, 0, 1, 0, tame=2)
