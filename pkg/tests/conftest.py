import random
from pathlib import Path

import pytest

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def rng():
    return random.Random(20240901)


@pytest.fixture(scope="session")
def fixture_dir():
    return FIXTURE_DIR
