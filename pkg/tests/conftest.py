import pytest

from cobord import fgl, lazard

TRUNC = 12


@pytest.fixture(scope="session")
def ctx():
    return fgl.context(TRUNC)


@pytest.fixture(scope="session")
def basis():
    return lazard.base_basis(TRUNC)
