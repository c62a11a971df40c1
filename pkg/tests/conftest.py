"""Pytest configuration and fixtures."""
import random

import pytest

from config import Settings
from controllers.diffop_controller import DiffOpController
from controllers.zeta_controller import ZetaController
from models.field import make_field


@pytest.fixture
def f2():
    return make_field(2)


@pytest.fixture
def f3():
    return make_field(3)


@pytest.fixture
def f4():
    return make_field(2, 2)


@pytest.fixture
def f5():
    return make_field(5)


@pytest.fixture
def f8():
    return make_field(2, 3)


@pytest.fixture
def f9():
    return make_field(3, 2)


@pytest.fixture
def settings():
    """Default settings, independent of any .env file."""
    return Settings()


@pytest.fixture
def rng():
    """Seeded random source for randomized cases."""
    return random.Random(20240101)


@pytest.fixture
def zeta(settings):
    return ZetaController(settings)


@pytest.fixture
def diffop(settings, zeta):
    return DiffOpController(settings, zeta)
