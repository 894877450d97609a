"""Shared fixtures: small benchmark groups used across the suite."""
import pytest

from maxinv.catalog import (
    alternating,
    cyclic,
    dihedral,
    elementary_abelian,
    frobenius,
    quaternion8,
    symmetric,
)


@pytest.fixture(scope="session")
def s3():
    return symmetric(3)


@pytest.fixture(scope="session")
def s4():
    return symmetric(4)


@pytest.fixture(scope="session")
def a4():
    return alternating(4)


@pytest.fixture(scope="session")
def a5():
    return alternating(5)


@pytest.fixture(scope="session")
def q8():
    return quaternion8()


@pytest.fixture(scope="session")
def d8():
    return dihedral(8)


@pytest.fixture(scope="session")
def d14():
    return dihedral(14)


@pytest.fixture(scope="session")
def c6():
    return cyclic(6)


@pytest.fixture(scope="session")
def c12():
    return cyclic(12)


@pytest.fixture(scope="session")
def v4():
    return elementary_abelian(2, 2)


@pytest.fixture(scope="session")
def f42():
    return frobenius(7, 6)
