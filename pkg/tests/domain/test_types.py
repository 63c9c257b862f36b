"""Tests for domain types."""
import math

import pytest
from pydantic import ValidationError

from collabsim.domain.errors import ParameterValidationError, ResourceSplitError
from collabsim.domain.types import (
    AgentTrajectory,
    NetworkState,
    ResourceSplit,
    SimulationParameters,
    TimeSeries,
)


def test_baseline_defaults(baseline):
    """Test the baseline vector carries the calibrated defaults."""
    assert baseline.N == 7.7e8
    assert baseline.R == 9.96e13
    assert baseline.alpha == 0.58625
    assert (baseline.beta, baseline.gamma, baseline.delta) == (0.35, 0.55, 0.20)
    assert (baseline.eta, baseline.omega) == (0.07, 0.05)
    assert (baseline.k, baseline.t0) == (0.38, 5.0)
    assert (baseline.A0, baseline.g) == (1.495e8, 5e6)
    assert (baseline.phi0, baseline.phiH, baseline.phiA) == (90.0, 90.0, 481.0)


@pytest.mark.parametrize("field,value", [
    ("alpha", 1.5),
    ("alpha", 0.0),
    ("omega", 1.0),
    ("N", -1.0),
    ("k", 0.0),
    ("A0", -5.0),
    ("gamma", -0.1),
])
def test_invalid_parameters_rejected(field, value):
    """Test invariant violations are rejected at construction."""
    with pytest.raises(ValidationError):
        SimulationParameters(**{field: value})


def test_non_finite_rejected():
    """Test infinities and NaN never enter a parameter vector."""
    with pytest.raises(ValidationError):
        SimulationParameters(R=math.inf)
    with pytest.raises(ValidationError):
        SimulationParameters(t0=math.nan)


def test_unknown_field_rejected():
    """Test extra fields are forbidden."""
    with pytest.raises(ValidationError):
        SimulationParameters(theta=2.0)


def test_with_overrides(baseline):
    """Test overrides return a validated copy."""
    updated = baseline.with_overrides({"alpha": 0.6, "eta": 0.1})
    assert updated.alpha == 0.6
    assert updated.eta == 0.1
    assert baseline.alpha == 0.58625
    assert baseline.with_overrides({}) is baseline


def test_with_overrides_errors(baseline):
    """Test override errors name the key and invariant."""
    with pytest.raises(ParameterValidationError) as exc:
        baseline.with_overrides({"alpha": 1.5})
    assert exc.value.key == "alpha"
    assert exc.value.invariant == "0 < alpha < 1"
    assert "alpha" in exc.value.message

    with pytest.raises(ParameterValidationError) as exc:
        baseline.with_overrides({"lambda": 1.0})
    assert exc.value.key == "lambda"
    assert exc.value.suggestions


def test_sub_type_accessors(baseline):
    """Test capability curve and agent trajectory come from the vector."""
    assert baseline.capability_curve.k == 0.38
    assert baseline.capability_curve.t0 == 5.0
    assert baseline.agent_trajectory.count(2) == 1.495e8 + 1e7


def test_resource_split_conservation():
    """Test R_H + R_A reproduces R exactly."""
    for share in (0.01, 0.3, 0.5, 0.76, 0.85, 0.95, 0.999, 1.0):
        split = ResourceSplit.from_share(9.96e13, share)
        assert split.R_H + split.R_A == 9.96e13
        assert split.R_H > 0
        assert split.R_A >= 0


def test_resource_split_from_ai_share():
    """Test the split built from omega gives R_A = omega R."""
    split = ResourceSplit.from_ai_share(9.96e13, 0.05)
    assert split.R_A == pytest.approx(0.05 * 9.96e13, rel=1e-12)
    assert split.human_share == pytest.approx(0.95)


@pytest.mark.parametrize("share", [0.0, -0.1, 1.2])
def test_resource_split_invalid(share):
    """Test shares outside (0, 1] are domain errors."""
    with pytest.raises(ResourceSplitError):
        ResourceSplit.from_share(1e13, share)


def test_network_state_bounds():
    """Test network state keeps p in [0, 1) and Theta >= 1."""
    NetworkState(p=0.0, theta=1.0)
    with pytest.raises(ValidationError):
        NetworkState(p=1.0, theta=1.07)
    with pytest.raises(ValidationError):
        NetworkState(p=0.2, theta=0.9)


def test_agent_trajectory_linear():
    """Test agents grow by g per year."""
    traj = AgentTrajectory(A0=1e8, g=5e6)
    assert traj.count(0) == 1e8
    assert traj.count(10) == 1.5e8
    with pytest.raises(ValidationError):
        AgentTrajectory(A0=1e8, g=-1.0)


def test_time_series():
    """Test time series years and validation."""
    ts = TimeSeries(name="Model 1", values=(1.0, 2.0, 3.0))
    assert ts.years == [0, 1, 2]
    assert len(ts) == 3
    assert ts.as_array().tolist() == [1.0, 2.0, 3.0]

    shifted = TimeSeries(name="x", start_year=2019, values=(1.0, 2.0))
    assert shifted.years == [2019, 2020]

    with pytest.raises(ValidationError):
        TimeSeries(name="empty", values=())
    with pytest.raises(ValidationError):
        TimeSeries(name="bad", values=(1.0, math.inf))
