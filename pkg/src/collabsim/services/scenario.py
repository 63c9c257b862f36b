"""Declarative experiment runner.

A ScenarioSpec names the models, horizon, overrides, an optional sweep
axis and an optional pairwise comparison. ``run_scenario`` evaluates it
year by year into a RunReport; the experiment catalog holds the seven
figure experiments.
"""
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterator, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from collabsim.core.production import MODEL_IDS, evaluate_model, model_components, network_state
from collabsim.domain.errors import OutputOverflowError, ScenarioError
from collabsim.domain.types import ResourceSplit, SimulationParameters, TimeSeries
from collabsim.utils.logger import get_logger
from .optimizer import AllocationResult, optimize_human_share, sweep_omega

logger = get_logger(__name__)

ScenarioKind = Literal["output", "network_multiplier", "allocation"]
ComparisonMetric = Literal["absolute_gap", "percent_gain"]


class SweepAxis(BaseModel):
    """One parameter varied over a list of values."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    parameter: str
    values: Tuple[float, ...] = Field(min_length=1)

    @model_validator(mode="after")
    def values_must_be_valid(self) -> "SweepAxis":
        if self.parameter not in SimulationParameters.model_fields:
            raise ValueError(f"Unknown sweep parameter '{self.parameter}'")
        # Field constraints are independent, so checking against the
        # defaults validates each value on its own
        for value in self.values:
            try:
                SimulationParameters.model_validate({self.parameter: value})
            except ValidationError as e:
                raise ValueError(
                    f"Sweep value {value!r} is invalid for '{self.parameter}': {e.errors()[0]['msg']}"
                ) from None
        return self


class Comparison(BaseModel):
    """Derived series of model ``models[0]`` against baseline ``models[1]``."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    models: Tuple[int, int]
    metric: ComparisonMetric = "percent_gain"


class ScenarioSpec(BaseModel):
    """Declarative description of one experiment."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str
    title: str = ""
    kind: ScenarioKind = "output"
    model_ids: Tuple[int, ...] = Field(min_length=1)
    horizon: int = Field(default=20, ge=1)
    overrides: Dict[str, float] = {}
    sweep: Optional[SweepAxis] = None
    comparison: Optional[Comparison] = None
    human_share: float = Field(default=0.85, gt=0, le=1)
    match_ai_share: bool = False
    decompose: bool = False
    # None defers to the configured allocation year
    allocation_year: Optional[float] = None

    @field_validator("model_ids")
    @classmethod
    def model_ids_must_exist(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        unknown = [m for m in v if m not in MODEL_IDS]
        if unknown:
            raise ValueError(f"Unknown model ids {unknown}; use 1..5")
        if len(set(v)) != len(v):
            raise ValueError("Model ids must be unique")
        return v

    @field_validator("overrides")
    @classmethod
    def override_keys_must_exist(cls, v: Dict[str, float]) -> Dict[str, float]:
        unknown = sorted(set(v) - set(SimulationParameters.model_fields))
        if unknown:
            raise ValueError(f"Unknown override parameters {unknown}")
        return v

    @model_validator(mode="after")
    def comparison_models_present(self) -> "ScenarioSpec":
        if self.comparison:
            missing = [m for m in self.comparison.models if m not in self.model_ids]
            if missing:
                raise ValueError(f"Comparison models {missing} are not in model_ids")
        if self.kind == "allocation":
            if self.model_ids != (2,):
                raise ValueError("Allocation scenarios optimise Model 2 only")
            if self.sweep or self.comparison:
                raise ValueError("Allocation scenarios take no sweep or comparison")
        if self.kind == "network_multiplier" and self.comparison:
            raise ValueError("Network multiplier scenarios have no model outputs to compare")
        return self


class RunReport(BaseModel):
    """Result of one scenario run. Percent gains are in percent units."""
    model_config = ConfigDict(frozen=True)

    spec: ScenarioSpec
    parameters: SimulationParameters
    series: Dict[str, TimeSeries] = {}
    derived: Dict[str, TimeSeries] = {}
    allocation: Optional[AllocationResult] = None

    @property
    def all_series(self) -> List[TimeSeries]:
        return [*self.series.values(), *self.derived.values()]

    @property
    def is_empty(self) -> bool:
        return not self.series and not self.derived and self.allocation is None


def _sweep_points(spec: ScenarioSpec, params: SimulationParameters) -> Iterator[Tuple[str, SimulationParameters]]:
    if spec.sweep is None:
        yield "", params
        return
    for value in spec.sweep.values:
        yield f"{spec.sweep.parameter}={value:g}", params.with_overrides({spec.sweep.parameter: value})


def _series_name(base: str, label: str) -> str:
    return f"{base} ({label})" if label else base


def _split_for(spec: ScenarioSpec, params: SimulationParameters) -> ResourceSplit:
    if not spec.match_ai_share:
        return ResourceSplit.from_share(params.R, spec.human_share)
    split = ResourceSplit.from_ai_share(params.R, params.omega)
    # Model 2 must see the same AI resources Model 4 gets from omega
    if not math.isclose(split.R_A, params.omega * params.R, rel_tol=1e-12):
        raise ScenarioError(
            f"Matched split gives R_A={split.R_A!r}, expected omega*R={params.omega * params.R!r}",
            metadata={"scenario": spec.name}
        )
    return split


def _compare(metric: str, models: Tuple[int, int], a: TimeSeries, b: TimeSeries, name: str) -> TimeSeries:
    if metric == "percent_gain":
        values = tuple(100.0 * (ya - yb) / yb for ya, yb in zip(a.values, b.values))
    else:
        values = tuple(ya - yb for ya, yb in zip(a.values, b.values))
    for year, value in zip(a.years, values):
        if not math.isfinite(value):
            raise OutputOverflowError(models[0], year, f"{metric.replace('_', ' ')} over Model {models[1]}")
    return TimeSeries(name=name, start_year=a.start_year, values=values)


def _delegates_to_omega_sweep(spec: ScenarioSpec) -> bool:
    return (
        spec.sweep is not None
        and spec.sweep.parameter == "omega"
        and set(spec.model_ids) <= {4, 5}
        and not spec.decompose
    )


def run_scenario(spec: ScenarioSpec, base: SimulationParameters) -> RunReport:
    """Evaluate a scenario year by year.

    Args:
        spec: Scenario to run
        base: Parameters the scenario overrides apply to

    Returns:
        RunReport; identical inputs always give identical reports

    Raises:
        ParameterValidationError: Overrides or sweep values break an invariant
        PenetrationDomainError: Agent count reaches the population
        OutputOverflowError: An output or comparison left the float range
    """
    params = base.with_overrides(spec.overrides)

    if spec.kind == "allocation":
        allocation = optimize_human_share(params, t=spec.allocation_year)
        logger.info(
            "Scenario complete",
            scenario=spec.name,
            kind=spec.kind,
            best_share=allocation.best_share,
        )
        return RunReport(spec=spec, parameters=params, allocation=allocation)

    years = range(spec.horizon)
    series: Dict[str, TimeSeries] = {}

    if _delegates_to_omega_sweep(spec):
        assert spec.sweep is not None
        for model_id in spec.model_ids:
            for ts in sweep_omega(params, spec.sweep.values, spec.horizon, model_id):
                series[ts.name] = ts
    else:
        for label, swept in _sweep_points(spec, params):
            if spec.kind == "network_multiplier":
                name = _series_name("Theta", label)
                series[name] = TimeSeries(
                    name=name,
                    values=tuple(network_state(swept, t).theta for t in years)
                )
                continue

            split = _split_for(spec, swept) if {2, 3} & set(spec.model_ids) else None
            for model_id in spec.model_ids:
                name = _series_name(f"Model {model_id}", label)
                series[name] = TimeSeries(
                    name=name,
                    values=tuple(evaluate_model(model_id, swept, t, split) for t in years)
                )
                if spec.decompose and model_id in (4, 5):
                    parts = [model_components(model_id, swept, t) for t in years]
                    for index, part in enumerate(("human", "AI")):
                        part_name = _series_name(f"Model {model_id} {part}", label)
                        series[part_name] = TimeSeries(
                            name=part_name,
                            values=tuple(p[index] for p in parts)
                        )

    derived: Dict[str, TimeSeries] = {}
    if spec.comparison is not None:
        a, b = spec.comparison.models
        metric = spec.comparison.metric
        labels = [label for label, _ in _sweep_points(spec, params)]
        for label in labels:
            name = _series_name(f"Model {a} vs Model {b} {metric.replace('_', ' ')}", label)
            derived[name] = _compare(
                metric,
                spec.comparison.models,
                series[_series_name(f"Model {a}", label)],
                series[_series_name(f"Model {b}", label)],
                name
            )

    logger.info(
        "Scenario complete",
        scenario=spec.name,
        models=list(spec.model_ids),
        horizon=spec.horizon,
        series=len(series),
        derived=len(derived),
    )
    return RunReport(spec=spec, parameters=params, series=series, derived=derived)


def experiment_catalog() -> List[ScenarioSpec]:
    """The seven figure experiments, in figure order."""
    return [
        ScenarioSpec(
            name="fig1",
            title="Model 2: total social output under AI collaboration",
            model_ids=(2,),
        ),
        ScenarioSpec(
            name="fig2",
            title="Model 2: optimal resource allocation between humans and AI",
            kind="allocation",
            model_ids=(2,),
        ),
        ScenarioSpec(
            name="fig3",
            title="Model 3: network effect multiplier over time",
            kind="network_multiplier",
            model_ids=(3,),
            sweep=SweepAxis(parameter="eta", values=(0.05, 0.07, 0.10)),
        ),
        ScenarioSpec(
            name="fig4",
            title="Model 3: total output with and without network effects",
            model_ids=(2, 3),
            comparison=Comparison(models=(3, 2), metric="percent_gain"),
        ),
        ScenarioSpec(
            name="fig5",
            title="Model 4: total output under different AI resource shares",
            model_ids=(4,),
            sweep=SweepAxis(parameter="omega", values=(0.05, 0.10, 0.20)),
        ),
        ScenarioSpec(
            name="fig6",
            title="Model 2 vs Model 4 at the same AI resource share",
            model_ids=(2, 4),
            match_ai_share=True,
            comparison=Comparison(models=(4, 2), metric="absolute_gap"),
        ),
        ScenarioSpec(
            name="fig7",
            title="Model 5: total output with and without network effects",
            model_ids=(4, 5),
            comparison=Comparison(models=(5, 4), metric="absolute_gap"),
        ),
    ]


def run_catalog(
    base: SimulationParameters,
    specs: Optional[List[ScenarioSpec]] = None,
    workers: int = 1
) -> List[RunReport]:
    """Run specs concurrently; reports come back in spec order."""
    specs = specs if specs is not None else experiment_catalog()
    with ThreadPoolExecutor(max_workers=max(workers, 1)) as pool:
        return list(pool.map(lambda spec: run_scenario(spec, base), specs))
