"""Domain types and errors."""
from .types import (
    SimulationParameters,
    ResourceSplit,
    CapabilityCurve,
    AgentTrajectory,
    NetworkState,
    TimeSeries,
)

__all__ = [
    'SimulationParameters',
    'ResourceSplit',
    'CapabilityCurve',
    'AgentTrajectory',
    'NetworkState',
    'TimeSeries',
]
