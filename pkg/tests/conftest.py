import pytest

from partition_asymptotics import PrecisionContext, partition_pentagonal


@pytest.fixture(scope="session")
def ctx50():
    return PrecisionContext(50)


@pytest.fixture(scope="session")
def ctx60():
    return PrecisionContext(60)


@pytest.fixture(scope="session")
def ctx80():
    return PrecisionContext(80)


@pytest.fixture(scope="session")
def ctx100():
    return PrecisionContext(100)


@pytest.fixture(scope="session")
def table():
    # covers the reference tables (1000), the threshold sweeps (~1200),
    # and the oracle-equivalence sweep (2000)
    return partition_pentagonal(2200)
