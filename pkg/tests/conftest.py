import pytest

from taylorpde import FIXTURES, solve


@pytest.fixture(scope="session")
def riccati():
    return FIXTURES["riccati"]


@pytest.fixture(scope="session")
def coupled():
    return FIXTURES["coupled"]


@pytest.fixture(scope="session")
def transport():
    return FIXTURES["transport"]


@pytest.fixture(scope="session")
def riccati15(riccati):
    return solve(riccati.system, riccati.initial, 15)


@pytest.fixture(scope="session")
def riccati20(riccati):
    return solve(riccati.system, riccati.initial, 20)


@pytest.fixture(scope="session")
def coupled20(coupled):
    return solve(coupled.system, coupled.initial, 20)


@pytest.fixture(scope="session")
def transport15(transport):
    return solve(transport.system, transport.initial, 15)
