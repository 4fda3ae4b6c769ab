import random

import pytest

from selfsim.nilpotent import get_presentation
from selfsim.selfsimilar.example import example_rep


@pytest.fixture(scope="session")
def example():
    return example_rep()


@pytest.fixture
def rng():
    return random.Random(20240617)


@pytest.fixture
def n32():
    return get_presentation(3, 2)
