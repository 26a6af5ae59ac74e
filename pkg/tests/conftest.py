import pytest

from gradedrings.builders import (
    galois_skew_example,
    group_algebra,
    m3_example,
)
from gradedrings.groups import cyclic_group
from gradedrings.linalg import GF, RATIONALS


@pytest.fixture(scope="session")
def m3_gf2():
    return m3_example(GF(2))


@pytest.fixture(scope="session")
def m3_q():
    return m3_example(RATIONALS)


@pytest.fixture(scope="session")
def gf4skew():
    return galois_skew_example(2, 2)


@pytest.fixture(scope="session")
def gf2_z2():
    return group_algebra(GF(2), cyclic_group(2))


@pytest.fixture(scope="session")
def q_z2():
    return group_algebra(RATIONALS, cyclic_group(2))
