"""Resource allocation search.

The human share x = R_H / R maximising Model 2 output is located with a
coarse grid scan followed by golden-section refinement around the best
grid point. Omega sweeps trace Models 4/5 across AI resource shares.
"""
import math
import warnings
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from collabsim.config.settings import get_settings
from collabsim.core.production import evaluate_model
from collabsim.domain.errors import NonUnimodalWarning, ScenarioError
from collabsim.domain.types import ResourceSplit, SimulationParameters, TimeSeries
from collabsim.utils.logger import get_logger

logger = get_logger(__name__)

INV_PHI = (math.sqrt(5) - 1) / 2
INV_PHI_SQUARED = (3 - math.sqrt(5)) / 2


class AllocationResult(BaseModel):
    """Best human share with the grid profile behind it."""
    model_config = ConfigDict(frozen=True)

    best_share: float
    best_output: float
    profile: Tuple[Tuple[float, float], ...]
    interval: Tuple[float, float]
    t: float
    non_unimodal: bool = False
    local_maxima: Tuple[float, ...] = ()

    @property
    def shares(self) -> List[float]:
        return [share for share, _ in self.profile]

    @property
    def outputs(self) -> List[float]:
        return [output for _, output in self.profile]


def golden_section_max(
    func: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-4
) -> Tuple[float, float]:
    """Shrink [a, b] around the maximum of a unimodal function.

    Reuses one evaluation per step.

    Returns:
        Bracket (c, d) with d - c <= tol containing the maximiser
    """
    (a, b) = (min(a, b), max(a, b))
    h = b - a
    if h <= tol:
        return a, b

    # Required steps to achieve tolerance
    n = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARED * h
    d = a + INV_PHI * h
    yc = func(c)
    yd = func(d)

    for _ in range(n - 1):
        if yc > yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARED * h
            yc = func(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = func(d)

    if yc > yd:
        return a, d
    return c, b


def _local_maxima(values: np.ndarray) -> np.ndarray:
    """Indices of grid points higher than their neighbours (plateaus count once)."""
    left = np.concatenate(([-np.inf], values[:-1]))
    right = np.concatenate((values[1:], [-np.inf]))
    return np.flatnonzero((values >= left) & (values > right))


def optimize_human_share(
    params: SimulationParameters,
    t: Optional[float] = None,
    interval: Optional[Tuple[float, float]] = None,
    tol: Optional[float] = None,
    grid_points: Optional[int] = None
) -> AllocationResult:
    """Find the human share maximising Model 2 output at time t.

    Args:
        params: Parameter vector (R is the total being split)
        t: Evaluation year, defaults to the end-of-horizon capability
        interval: Searched (lo, hi); lo > 0 keeps the AI/human ratio finite
        tol: Golden-section tolerance in share units
        grid_points: Size of the coarse scan

    Returns:
        AllocationResult; ``non_unimodal`` is set and a NonUnimodalWarning
        emitted when separated local maxima exist on the grid
    """
    settings = get_settings()
    t = settings.ALLOCATION_YEAR if t is None else t
    lo, hi = interval or (settings.SEARCH_INTERVAL_LOW, settings.SEARCH_INTERVAL_HIGH)
    tol = settings.SEARCH_TOLERANCE if tol is None else tol
    grid_points = grid_points or settings.GRID_POINTS

    if not 0 < lo < hi <= 1:
        raise ScenarioError(
            f"Search interval ({lo}, {hi}) must satisfy 0 < lo < hi <= 1",
            suggestions=["Keep lo above 0: the AI/human ratio diverges as the human share vanishes"]
        )

    def f(x: float) -> float:
        return evaluate_model(2, params, t, ResourceSplit.from_share(params.R, x))

    grid = np.linspace(lo, hi, grid_points)
    values = np.array([f(float(x)) for x in grid])

    peaks = _local_maxima(values)
    peak_shares = grid[peaks]
    non_unimodal = len(peaks) > 1 and float(peak_shares.max() - peak_shares.min()) > tol
    if non_unimodal:
        message = (
            f"Allocation profile has {len(peaks)} local maxima at shares "
            f"{', '.join(f'{x:.4f}' for x in peak_shares)}; refining the global one"
        )
        logger.warning(message, t=t)
        warnings.warn(message, NonUnimodalWarning, stacklevel=2)

    best = int(np.argmax(values))
    a = float(grid[max(best - 1, 0)])
    b = float(grid[min(best + 1, grid_points - 1)])
    c, d = golden_section_max(f, a, b, tol)
    refined_share = (c + d) / 2
    refined_output = f(refined_share)

    if refined_output >= values[best]:
        best_share, best_output = refined_share, refined_output
    else:
        best_share, best_output = float(grid[best]), float(values[best])

    logger.debug(
        "Allocation search complete",
        t=t,
        best_share=best_share,
        best_output=best_output,
        grid_points=grid_points,
    )
    return AllocationResult(
        best_share=best_share,
        best_output=best_output,
        profile=tuple((float(x), float(y)) for x, y in zip(grid, values)),
        interval=(lo, hi),
        t=t,
        non_unimodal=non_unimodal,
        local_maxima=tuple(float(x) for x in peak_shares),
    )


def allocation_path(
    params: SimulationParameters,
    horizon: int,
    interval: Optional[Tuple[float, float]] = None,
    tol: Optional[float] = None
) -> TimeSeries:
    """Optimal human share year by year as AI capability matures."""
    shares = [
        optimize_human_share(params, t=float(t), interval=interval, tol=tol).best_share
        for t in range(horizon)
    ]
    return TimeSeries(name="optimal human share", values=tuple(shares))


def sweep_omega(
    params: SimulationParameters,
    omegas: Sequence[float],
    horizon: int,
    model_id: int = 4
) -> List[TimeSeries]:
    """One Model 4 or 5 trajectory per AI resource share.

    Raises:
        ScenarioError: Empty sweep, bad model id or horizon
        ParameterValidationError: A share outside (0, 1)
    """
    if not omegas:
        raise ScenarioError("Omega sweep needs at least one value")
    if model_id not in (4, 5):
        raise ScenarioError(
            f"Omega sweeps apply to Models 4 and 5, not Model {model_id}",
            suggestions=["Use --model 4 or --model 5"]
        )
    if horizon < 1:
        raise ScenarioError(f"Horizon must be at least 1 year, got {horizon}")

    family = []
    for omega in omegas:
        swept = params.with_overrides({"omega": omega})
        family.append(TimeSeries(
            name=f"Model {model_id} (omega={omega:g})",
            values=tuple(evaluate_model(model_id, swept, t) for t in range(horizon)),
        ))
    logger.debug("Omega sweep complete", model_id=model_id, omegas=list(omegas), horizon=horizon)
    return family
