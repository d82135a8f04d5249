import os

# in-memory cache database for the service tests; set before hilbquant.config is imported
os.environ['HILBQUANT_DATABASE_URL'] = 'sqlite://'
os.environ.setdefault('HILBQUANT_LOG_LEVEL', 'WARNING')

import pytest

from hilbquant.exactalg import coefficient_field
from hilbquant.fock import fock_space
from hilbquant.surface import surface


@pytest.fixture
def cf1():
    return coefficient_field(1)


@pytest.fixture
def a1():
    return surface(1)


@pytest.fixture
def space_e():
    """Fock space of the A_1 surface with exceptional labels e1, 1."""
    return fock_space(1, 'e')
