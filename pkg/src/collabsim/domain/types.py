"""Domain types for collabsim.

All types are immutable pydantic models. Monetary quantities are USD,
time is in years, counts are persons or agents.
"""
import math
from typing import Any, ClassVar, Dict, List, Mapping, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from .errors import ParameterValidationError, ResourceSplitError


# Human readable invariant per parameter, used in validation diagnostics
PARAMETER_INVARIANTS: Dict[str, str] = {
    "N": "N > 0",
    "R": "R > 0",
    "alpha": "0 < alpha < 1",
    "beta": "beta > 0",
    "gamma": "gamma >= 0",
    "delta": "delta > 0",
    "eta": "eta >= 0",
    "omega": "0 < omega < 1",
    "k": "k > 0",
    "t0": "t0 finite",
    "A0": "A0 >= 0",
    "g": "g >= 0",
    "phi0": "phi0 > 0",
    "phiH": "phiH > 0",
    "phiA": "phiA > 0",
    "human_share": "0 < human_share <= 1",
}


def parameter_error_from(error: ValidationError, prefix: str = "") -> ParameterValidationError:
    """Convert the first pydantic error into a ParameterValidationError.

    Args:
        error: The pydantic validation error
        prefix: Dotted path of the enclosing block, e.g. ``parameters``

    Returns:
        Error naming the offending key and the violated invariant
    """
    first = error.errors()[0]
    loc = [str(part) for part in first["loc"]]
    key = ".".join([prefix, *loc] if prefix else loc) or prefix
    field = loc[-1] if loc else ""
    invariant = PARAMETER_INVARIANTS.get(field)
    message = f"Invalid value for '{key}': {first['msg']}"
    if invariant:
        message += f" (requires {invariant})"
    return ParameterValidationError(message, key=key, invariant=invariant)


class SimulationParameters(BaseModel):
    """Full parameter vector of the five production models.

    Defaults are the calibrated baseline: China 2019 population and capital
    stock, labour share 0.58625, rounded calibration results for the
    efficiencies.
    """
    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    N: float = Field(default=7.7e8, gt=0)
    R: float = Field(default=9.96e13, gt=0)
    alpha: float = Field(default=0.58625, gt=0, lt=1)
    beta: float = Field(default=0.35, gt=0)
    gamma: float = Field(default=0.55, ge=0)
    delta: float = Field(default=0.20, gt=0)
    eta: float = Field(default=0.07, ge=0)
    omega: float = Field(default=0.05, gt=0, lt=1)
    k: float = Field(default=0.38, gt=0)
    t0: float = 5.0
    A0: float = Field(default=1.495e8, ge=0)
    g: float = Field(default=5e6, ge=0)
    phi0: float = Field(default=90.0, gt=0)
    phiH: float = Field(default=90.0, gt=0)
    phiA: float = Field(default=481.0, gt=0)

    @classmethod
    def field_names(cls) -> List[str]:
        return list(cls.model_fields)

    def with_overrides(self, overrides: Mapping[str, Any]) -> "SimulationParameters":
        """Return a validated copy with some fields replaced.

        Raises:
            ParameterValidationError: Unknown key or violated invariant
        """
        for key in overrides:
            if key not in type(self).model_fields:
                raise ParameterValidationError(
                    f"Unknown parameter '{key}'",
                    key=key,
                    suggestions=[f"Known parameters: {', '.join(self.field_names())}"]
                )
        if not overrides:
            return self
        try:
            return type(self).model_validate({**self.model_dump(), **overrides})
        except ValidationError as e:
            raise parameter_error_from(e) from e

    @property
    def capability_curve(self) -> "CapabilityCurve":
        return CapabilityCurve(k=self.k, t0=self.t0)

    @property
    def agent_trajectory(self) -> "AgentTrajectory":
        return AgentTrajectory(A0=self.A0, g=self.g)


class ResourceSplit(BaseModel):
    """Total resources partitioned between humans and AI.

    Built from a share, never from two free values. The larger part is
    always obtained by subtraction, which is exact in binary floating point,
    so ``R_H + R_A == R_total`` holds bit for bit.
    """
    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    R_total: float = Field(gt=0)
    human_share: float = Field(gt=0, le=1)

    @classmethod
    def from_share(cls, R_total: float, human_share: float) -> "ResourceSplit":
        try:
            return cls(R_total=R_total, human_share=human_share)
        except ValidationError as e:
            raise ResourceSplitError(
                parameter_error_from(e).message,
                metadata={"R_total": R_total, "human_share": human_share}
            ) from e

    @classmethod
    def from_ai_share(cls, R_total: float, omega: float) -> "ResourceSplit":
        return cls.from_share(R_total, 1.0 - omega)

    def _partition(self) -> Tuple[float, float]:
        if self.human_share >= 0.5:
            r_h = self.R_total * self.human_share
            return r_h, self.R_total - r_h
        r_a = self.R_total * (1.0 - self.human_share)
        return self.R_total - r_a, r_a

    @property
    def R_H(self) -> float:
        return self._partition()[0]

    @property
    def R_A(self) -> float:
        return self._partition()[1]


class CapabilityCurve(BaseModel):
    """Logistic AI capability curve s(t) with rate k and inflection t0."""
    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    k: float = Field(gt=0)
    t0: float


class AgentTrajectory(BaseModel):
    """Linear agent count A(t) = A0 + g*t."""
    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    A0: float = Field(ge=0)
    g: float = Field(ge=0)

    def count(self, t: float) -> float:
        return self.A0 + self.g * t


class NetworkState(BaseModel):
    """Penetration rate and the network multiplier it induces."""
    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    p: float = Field(ge=0, lt=1)
    theta: float = Field(ge=1)


class TimeSeries(BaseModel):
    """Annual trajectory starting at ``start_year`` with a one year step."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    STEP: ClassVar[int] = 1

    name: str
    start_year: int = 0
    values: Tuple[float, ...]

    @field_validator("values")
    @classmethod
    def values_must_be_finite(cls, v: Tuple[float, ...]) -> Tuple[float, ...]:
        if not v:
            raise ValueError("Time series cannot be empty")
        if not all(math.isfinite(x) for x in v):
            raise ValueError("Time series values must be finite")
        return v

    @property
    def years(self) -> List[int]:
        return [self.start_year + i * self.STEP for i in range(len(self.values))]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    def __len__(self) -> int:
        return len(self.values)
