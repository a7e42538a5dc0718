import pytest

from collatz_weyl.selftest import load_vectors


@pytest.fixture(scope="session")
def vectors():
    return load_vectors()
