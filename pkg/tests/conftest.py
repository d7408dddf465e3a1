import pytest

from weylord import preset_datum, weyl_group


@pytest.fixture(scope="session")
def gl3():
    return preset_datum("A2", "gl", name="GL3")


@pytest.fixture(scope="session")
def sl3():
    return preset_datum("A2", "simply_connected", name="SL3")


@pytest.fixture(scope="session")
def pgl3():
    return preset_datum("A2", "adjoint", name="PGL3")


@pytest.fixture(scope="session")
def gl4():
    return preset_datum("A3", "gl", name="GL4")


@pytest.fixture(scope="session")
def w_gl3(gl3):
    return weyl_group(gl3)


@pytest.fixture(scope="session")
def w_gl4(gl4):
    return weyl_group(gl4)
