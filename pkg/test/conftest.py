import random
from test.common import pytest_addoption, pytest_configure, pytest_runtest_setup
from test.family_tests import *
from test.globals import *

import pytest

#########################################
# Fixtures
@pytest.fixture()
def test_union_is_family(request):
    yield union_is_family


@pytest.fixture()
def test_face_numbers(request):
    yield face_numbers_by_enumeration


@pytest.fixture()
def test_parity_weights(request):
    yield parity_weights_by_enumeration


@pytest.fixture()
def test_scan(request):
    yield scan_by_enumeration


@pytest.fixture()
def rng(request):
    seed = request.config.getoption("--seed")
    yield random.Random(f"{seed}:{request.node.name}")


@pytest.fixture()
def no_config(monkeypatch):
    """Keep host configuration files out of the run"""
    monkeypatch.delenv("IEX_CONFIG", raising=False)
    monkeypatch.setattr("iex.config.CONFIG_DEFAULT_PATH", "/nonexistent/pyiex.yaml")
    yield
