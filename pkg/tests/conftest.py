import pytest

from equilines import construct, golay, seidel


@pytest.fixture(scope="session")
def code():
    return golay.standard_code()


@pytest.fixture(scope="session")
def asche(code):
    return construct.asche_system(code)


@pytest.fixture(scope="session")
def final54(code):
    return construct.final_system(code)


@pytest.fixture(scope="session")
def s54(final54):
    return seidel.seidel_from(final54)
