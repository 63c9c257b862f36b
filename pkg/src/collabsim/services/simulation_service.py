"""Service facade used by the command line."""
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict

from collabsim.config.loader import ConfigDocument
from collabsim.config.settings import CollabSimSettings
from collabsim.domain.errors import CollabSimError
from collabsim.domain.types import SimulationParameters
from .base_service import BaseService, Result
from .calibration import AnchorSet, CalibrationResult, CalibrationVariant, calibrate
from .optimizer import AllocationResult, allocation_path, optimize_human_share
from .scenario import (
    Comparison,
    ComparisonMetric,
    RunReport,
    ScenarioSpec,
    SweepAxis,
    experiment_catalog,
    run_catalog,
    run_scenario,
)


class FigureArtifact(BaseModel):
    """Files written for one catalog entry."""
    model_config = ConfigDict(frozen=True)

    name: str
    csv_path: Path
    svg_path: Path


class SimulationService(BaseService):
    """Runs simulations described by a config document."""

    def __init__(
        self,
        document: Optional[ConfigDocument] = None,
        settings: Optional[CollabSimSettings] = None
    ):
        super().__init__(settings)
        self.document = document or ConfigDocument()

    @property
    def parameters(self) -> SimulationParameters:
        return self.document.parameters

    def _run(self, spec: ScenarioSpec) -> Result[RunReport]:
        try:
            report = run_scenario(spec, self.parameters)
        except CollabSimError as e:
            self._log_action("run_scenario", "failed", scenario=spec.name, error=e.message)
            return Result.from_error(e)
        return Result.ok(report)

    def simulate(
        self,
        model_id: int,
        horizon: Optional[int] = None,
        decompose: bool = False
    ) -> Result[RunReport]:
        """
        Trajectory of one model.

        Args:
            model_id: Model 1..5
            horizon: Years to simulate (default from settings)
            decompose: Also report the human and AI terms of Models 4/5
        """
        try:
            spec = ScenarioSpec(
                name=f"model{model_id}",
                title=f"Model {model_id}",
                model_ids=(model_id,),
                horizon=horizon or self.settings.DEFAULT_HORIZON,
                human_share=self.document.allocation.human_share,
                decompose=decompose,
            )
        except ValueError as e:
            return Result.fail(str(e), exit_code=2)
        return self._run(spec)

    def compare(
        self,
        model_ids: Sequence[int],
        horizon: Optional[int] = None,
        metric: ComparisonMetric = "percent_gain",
        match_ai_share: bool = False
    ) -> Result[RunReport]:
        """Two models side by side plus the derived gap of the first over the second."""
        ids = tuple(model_ids)
        if len(ids) != 2:
            return Result.fail(
                f"compare needs exactly two models, got {len(ids)}",
                suggestions=["Use --models 3,2"],
                exit_code=2
            )
        try:
            spec = ScenarioSpec(
                name="compare",
                title=f"Model {ids[0]} vs Model {ids[1]}",
                model_ids=ids,
                horizon=horizon or self.settings.DEFAULT_HORIZON,
                human_share=self.document.allocation.human_share,
                match_ai_share=match_ai_share,
                comparison=Comparison(models=(ids[0], ids[1]), metric=metric),
            )
        except ValueError as e:
            return Result.fail(str(e), exit_code=2)
        return self._run(spec)

    def sweep(
        self,
        parameter: str,
        values: Sequence[float],
        model_ids: Sequence[int] = (4,),
        horizon: Optional[int] = None
    ) -> Result[RunReport]:
        """One trajectory per value of ``parameter``."""
        try:
            spec = ScenarioSpec(
                name=f"sweep-{parameter}",
                title=f"Sweep over {parameter}",
                model_ids=tuple(model_ids),
                horizon=horizon or self.settings.DEFAULT_HORIZON,
                human_share=self.document.allocation.human_share,
                sweep=SweepAxis(parameter=parameter, values=tuple(values)),
            )
        except ValueError as e:
            return Result.fail(str(e), exit_code=2)
        return self._run(spec)

    def optimize(self, year: Optional[float] = None) -> Result[AllocationResult]:
        """Best Model 2 human share at ``year``."""
        try:
            result = optimize_human_share(self.parameters, t=year)
        except CollabSimError as e:
            return Result.from_error(e)
        self._log_action("optimize", best_share=result.best_share, t=result.t)
        return Result.ok(result)

    def allocation_path(self, horizon: Optional[int] = None) -> Result[RunReport]:
        """Best Model 2 human share in each year of the horizon."""
        try:
            spec = ScenarioSpec(
                name="allocation-path",
                title="Optimal human share by year",
                model_ids=(2,),
                horizon=horizon or self.settings.DEFAULT_HORIZON,
            )
        except ValueError as e:
            return Result.fail(str(e), exit_code=2)
        try:
            path = allocation_path(self.parameters, spec.horizon)
        except CollabSimError as e:
            return Result.from_error(e)
        self._log_action("allocation_path", horizon=spec.horizon, final_share=path.values[-1])
        return Result.ok(RunReport(spec=spec, parameters=self.parameters, series={path.name: path}))

    def calibrate(
        self,
        anchors: Optional[AnchorSet] = None,
        variant: CalibrationVariant = CalibrationVariant.ENHANCED
    ) -> Result[CalibrationResult]:
        """Back-solve phi0/phiH and phiA from anchors (the document's by default)."""
        try:
            result = calibrate(anchors or self.document.anchors, self.parameters.alpha, variant)
        except CollabSimError as e:
            return Result.from_error(e)
        return Result.ok(result)

    def scenarios(self) -> List[ScenarioSpec]:
        """
        Catalog experiments followed by any scenarios from the document.

        Specs that leave the human share or the allocation year unset take
        the document share and the configured year.
        """
        resolved = []
        for spec in [*experiment_catalog(), *self.document.scenarios]:
            update: Dict[str, Any] = {}
            if "human_share" not in spec.model_fields_set:
                update["human_share"] = self.document.allocation.human_share
            if spec.allocation_year is None:
                update["allocation_year"] = self.settings.ALLOCATION_YEAR
            resolved.append(spec.model_copy(update=update) if update else spec)
        return resolved

    def figures(self, output_dir: Optional[Path] = None) -> Result[List[FigureArtifact]]:
        """
        Run every scenario and write a CSV and an SVG for each.

        Reports are computed concurrently; files are written in catalog
        order.

        Args:
            output_dir: Target directory (default from settings)

        Returns:
            Result with one FigureArtifact per scenario
        """
        from collabsim.reporting import chart_from_report, write_csv, write_svg_chart

        output_dir = Path(output_dir or self.settings.OUTPUT_DIR)
        try:
            reports = run_catalog(self.parameters, self.scenarios(), workers=self.settings.FIGURE_WORKERS)
            artifacts = []
            for report in reports:
                name = report.spec.name
                csv_path = write_csv(report, output_dir / f"{name}.csv")
                svg_path = write_svg_chart(chart_from_report(report), output_dir / f"{name}.svg")
                artifacts.append(FigureArtifact(name=name, csv_path=csv_path, svg_path=svg_path))
        except CollabSimError as e:
            self._log_action("figures", "failed", error=e.message)
            return Result.from_error(e)

        self._log_action("figures", count=len(artifacts), output_dir=str(output_dir))
        return Result.ok(artifacts)
