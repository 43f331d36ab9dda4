import random

import pytest

from gfft.gf import field_make


@pytest.fixture
def rng():
    return random.Random(0xF0F7)


@pytest.fixture(scope="session")
def F127():
    return field_make(127)


@pytest.fixture(scope="session")
def F17():
    return field_make(17)


@pytest.fixture(scope="session")
def F9():
    return field_make(3, 2)


@pytest.fixture(scope="session")
def F27():
    return field_make(3, 3)


@pytest.fixture(scope="session")
def F64():
    return field_make(2, 6)
