import pytest

from berge import validate
from berge.constructions import fano as _fano


@pytest.fixture
def fano():
    return _fano()


@pytest.fixture
def one_triple():
    return validate(3, [(0, 1, 2)])


@pytest.fixture
def two_triples():
    return validate(6, [(0, 1, 2), (3, 4, 5)])


@pytest.fixture
def triangle():
    return validate(3, [(0, 1), (1, 2), (0, 2)])
