import random

import pytest

from src.services.quat import TernaryForm, ring_from_form


@pytest.fixture
def hurwitz_form():
    return TernaryForm(1, 1, 1, 1, 1, 1)


@pytest.fixture
def identity_form():
    return TernaryForm(1, 1, 1, 0, 0, 0)


@pytest.fixture
def hurwitz_ring(hurwitz_form):
    return ring_from_form(hurwitz_form)


@pytest.fixture
def hamilton_ring(identity_form):
    return ring_from_form(identity_form)


@pytest.fixture
def rng():
    return random.Random(20240607)
