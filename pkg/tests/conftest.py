"""Shared fixtures loaded from the bundled catalog."""

import pytest
from phasefan.fixtures import FixtureCatalog


@pytest.fixture(scope='session')
def catalog():
    return FixtureCatalog()


@pytest.fixture(scope='session')
def u24(catalog):
    return catalog.matroid('u24')


@pytest.fixture(scope='session')
def u34(catalog):
    return catalog.matroid('u34')


@pytest.fixture(scope='session')
def u35(catalog):
    return catalog.matroid('u35')


@pytest.fixture(scope='session')
def k4(catalog):
    return catalog.matroid('k4')


@pytest.fixture(scope='session')
def fano(catalog):
    return catalog.matroid('fano')


@pytest.fixture(scope='session')
def k4_oriented(catalog):
    return catalog.oriented('k4')


@pytest.fixture(scope='session')
def u34_oriented(catalog):
    return catalog.oriented('u34')
