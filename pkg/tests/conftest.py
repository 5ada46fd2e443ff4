import pytest

from milnezeta.models import CoulombParams
from milnezeta.zeros import scan_zeros


@pytest.fixture
def params():
    return CoulombParams(eps=2.0, k=1.0)


@pytest.fixture(scope='session')
def scanned_zeros():
    return scan_zeros(120.0, 0.01)
