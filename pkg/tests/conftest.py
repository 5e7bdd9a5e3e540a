import pytest

from partition_residues import build_table


@pytest.fixture(scope="session")
def table900():
    return build_table(900)


@pytest.fixture(scope="session")
def table1500():
    return build_table(1500)
