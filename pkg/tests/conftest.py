import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from ggs_codes.agcode import semigroup_infinity  # noqa: E402
from ggs_codes.curve import curve_params, enumerate_points  # noqa: E402


@pytest.fixture(scope="session")
def p25():
    return curve_params(2, 5)


@pytest.fixture(scope="session")
def pts25(p25):
    return enumerate_points(p25)


@pytest.fixture(scope="session")
def s25(p25):
    return semigroup_infinity(p25)


@pytest.fixture(scope="session")
def p33():
    return curve_params(3, 3)


@pytest.fixture(scope="session")
def pts33(p33):
    return enumerate_points(p33)
