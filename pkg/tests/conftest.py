# -*- coding: utf-8 -*-
import os
import sys

import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from lib.config.config_manager import ConfigManager  # noqa: E402
from lib.numsg import make_semigroup  # noqa: E402


@pytest.fixture(autouse=True)
def _no_truncation_override(monkeypatch):
    monkeypatch.delenv("STCI_TRUNC", raising=False)


@pytest.fixture
def config_manager():
    return ConfigManager(env="test")


@pytest.fixture
def stci_config(config_manager):
    return config_manager.get_component_config("stci")


@pytest.fixture
def s457():
    return make_semigroup(4, 5, 7)


@pytest.fixture
def s5713():
    return make_semigroup(5, 7, 13)


@pytest.fixture
def s51728():
    return make_semigroup(5, 17, 28)
