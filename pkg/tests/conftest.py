import pytest

from radact.core import validate_act, validate_monoid
from radact.universe import default_universe


@pytest.fixture(scope="session")
def U():
    """The default verification universe, shared across the whole run."""
    return default_universe()


@pytest.fixture(scope="session")
def T1():
    return validate_monoid([[0]], 0, "T1")


@pytest.fixture(scope="session")
def E2():
    return validate_monoid([[0, 1], [1, 1]], 0, "E2")


@pytest.fixture(scope="session")
def Z2():
    return validate_monoid([[0, 1], [1, 0]], 0, "Z2")


@pytest.fixture(scope="session")
def R2(E2):
    """Left regular act of E2: element 0 is the identity, 1 the idempotent."""
    return validate_act(E2, [[0, 1], [1, 1]], "R2")


@pytest.fixture(scope="session")
def C2(Z2):
    """The free two-point orbit over the two-element group: no zeros."""
    return validate_act(Z2, [[0, 1], [1, 0]], "C2")
