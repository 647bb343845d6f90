import random

import pytest

import pldl
from pldl import settings
from test.helpers import load_corpus

collect_ignore = [
    'setup.py',
    'pldl/__main__.py',
    'build/',
    'test/examples',
]


def pytest_addoption(parser):
    parser.addoption("--pldl-debug", "-D", action='store_true',
                     help="Enables pldl's debug output.")
    parser.addoption("--seed", action='store', type=int, default=None,
                     help="Seed of the randomized tests (default: settings.default_seed).")


def pytest_configure(config):
    if config.option.pldl_debug:
        pldl.set_debug_function()


@pytest.fixture(scope='session')
def seed(request):
    value = request.config.option.seed
    return settings.default_seed if value is None else value


@pytest.fixture()
def rng(seed):
    """A fresh random generator per test, so tests don't depend on each other."""
    return random.Random(seed)


@pytest.fixture(scope='session')
def corpus():
    return load_corpus()


@pytest.fixture()
def small_caps(monkeypatch):
    monkeypatch.setattr(settings, 'max_nba_states', 10)
    monkeypatch.setattr(settings, 'max_det_states', 10)
    monkeypatch.setattr(settings, 'max_product_vertices', 10)
    monkeypatch.setattr(settings, 'max_game_vertices', 10)
