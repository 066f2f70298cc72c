import random

import pytest
from mpmath import mp


@pytest.fixture(autouse=True)
def working_precision_256():
    with mp.workprec(256):
        yield


@pytest.fixture
def rng():
    return random.Random(20240611)
