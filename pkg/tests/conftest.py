import pytest

from wallcube.corpus import random_corpus
from wallcube.io import FIXTURES, load_fixture

CORPUS_SEED = 20261018


@pytest.fixture(scope="session")
def fixtures():
    return {name: load_fixture(name) for name in FIXTURES}


@pytest.fixture
def PT(fixtures):
    return fixtures["PT"]


@pytest.fixture
def TWO(fixtures):
    return fixtures["TWO"]


@pytest.fixture
def P3(fixtures):
    return fixtures["P3"]


@pytest.fixture
def HEX6(fixtures):
    return fixtures["HEX6"]


@pytest.fixture(scope="session")
def corpus():
    return random_corpus(CORPUS_SEED, 200)
