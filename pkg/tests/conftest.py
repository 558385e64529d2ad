import pytest

from knotpad.corpus import named_diagrams, random_plats


@pytest.fixture(scope="session")
def corpus():
    return named_diagrams()


@pytest.fixture(scope="session")
def plats():
    return random_plats()
