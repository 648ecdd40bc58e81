import random

import pytest

from detf5.field import DEFAULT_PRIME, PrimeField


@pytest.fixture(scope="session")
def field():
    return PrimeField(DEFAULT_PRIME)


@pytest.fixture
def rng():
    return random.Random(12345)
