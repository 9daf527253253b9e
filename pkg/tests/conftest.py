import pytest

from cycleprefix import Params


@pytest.fixture
def gamma22():
    return Params(2, 2, 0)


@pytest.fixture
def gamma32():
    return Params(3, 2, 0)


@pytest.fixture
def gamma33():
    return Params(3, 3, 0)


@pytest.fixture
def gamma43():
    return Params(4, 3, 0)


@pytest.fixture
def gamma44r1():
    return Params(4, 4, 1)
