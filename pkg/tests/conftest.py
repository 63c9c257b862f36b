"""Test configuration and fixtures for collabsim."""
import os

import pytest
import factory.random

from collabsim.config import clear_settings_cache
from collabsim.config.loader import default_anchors
from collabsim.domain.types import ResourceSplit, SimulationParameters
from collabsim.services.calibration import calibrate_phi0


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch):
    """Settings come from defaults only, never from the developer's shell."""
    for key in list(os.environ):
        if key.startswith("COLLABSIM_"):
            monkeypatch.delenv(key)
    clear_settings_cache()
    yield
    clear_settings_cache()


@pytest.fixture
def baseline() -> SimulationParameters:
    """Baseline parameter vector (phi0 = phiH = 90, phiA = 481)."""
    return SimulationParameters()


@pytest.fixture
def anchors():
    """Anchors shipped with the package."""
    return default_anchors()


@pytest.fixture
def calibrated(baseline, anchors) -> SimulationParameters:
    """Baseline with phi0 back-solved from the 2010 anchor."""
    return baseline.with_overrides({"phi0": calibrate_phi0(anchors.human, baseline.alpha)})


@pytest.fixture
def default_split(baseline) -> ResourceSplit:
    """R_H = 0.85 R."""
    return ResourceSplit.from_share(baseline.R, 0.85)


@pytest.fixture
def seeded_random():
    """Reseed factory-boy so random parameter vectors repeat across runs."""
    factory.random.reseed_random(20240615)
