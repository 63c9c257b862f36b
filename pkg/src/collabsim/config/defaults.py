"""Baseline parameter values and where they come from.

Monetary quantities are USD (2019 prices), time in years, counts in
persons or agents.
"""
from typing import Dict, NamedTuple

from collabsim.domain.types import PARAMETER_INVARIANTS, SimulationParameters


class Provenance(NamedTuple):
    value: float
    unit: str
    source: str
    invariant: str


_SOURCES: Dict[str, tuple] = {
    "N": ("persons", "China labour force, 2019"),
    "R": ("USD", "China capital stock, 2019"),
    "alpha": ("-", "labour share of income, 2019 average"),
    "beta": ("-", "human-AI complementarity elasticity, assumed"),
    "gamma": ("-", "collaboration efficiency coefficient, assumed"),
    "delta": ("-", "AI capability enhancement coefficient, assumed"),
    "eta": ("-", "network effect strength, assumed"),
    "omega": ("-", "policy share of resources allocated to AI"),
    "k": ("1/year", "logistic growth rate of AI capability"),
    "t0": ("year", "inflection year of AI capability"),
    "A0": ("agents", "AI agents in service, 2019"),
    "g": ("agents/year", "annual growth of AI agents, low end of 3e6..1e7"),
    "phi0": ("USD/(person^a USD^(1-a))", "calibrated from the 2010 anchor, rounded"),
    "phiH": ("USD/(person^a USD^(1-a))", "equal to phi0"),
    "phiA": ("USD/(agent^a USD^(1-a))", "calibrated from the 2019 anchor, rounded"),
}


def baseline_provenance() -> Dict[str, Provenance]:
    """Provenance record for every SimulationParameters field."""
    baseline = SimulationParameters()
    return {
        name: Provenance(
            value=getattr(baseline, name),
            unit=_SOURCES[name][0],
            source=_SOURCES[name][1],
            invariant=PARAMETER_INVARIANTS[name],
        )
        for name in SimulationParameters.field_names()
    }


# Model 2/3 human share used by the output experiments (R_H = 0.85 R)
DEFAULT_HUMAN_SHARE = 0.85
