""" Shared fixtures """

import pytest

from ramanujan_psi.bernoulli import shared_table
from ramanujan_psi.config import Settings
from ramanujan_psi.series import EvalParams

GAMMA = 0.5772156649015329
ONE_MINUS_GAMMA = 0.42278433509846714
ZETA3 = 1.2020569031595942
ZETA5 = 1.0369277551433699
ZETA7 = 1.0083492773819228


@pytest.fixture(scope="session")
def table():
    return shared_table(64)


@pytest.fixture
def params():
    return EvalParams(tol=1e-13, k_terms=10)


@pytest.fixture
def settings():
    return Settings()
