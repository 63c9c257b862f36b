"""Command line interface.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""
import sys
from functools import wraps
from pathlib import Path
from typing import Any, Callable, Dict, NoReturn, Optional, Sequence, Tuple, cast

import click
import pandas as pd

from collabsim import __version__
from collabsim.config.defaults import baseline_provenance
from collabsim.config.loader import apply_set_overrides, dump_config, load_anchors, load_config
from collabsim.domain.errors import CollabSimError
from collabsim.domain.types import SimulationParameters
from collabsim.reporting import report_frame, write_csv
from collabsim.services.base_service import Result
from collabsim.services.calibration import AnchorSet, CalibrationVariant, round_trip_error
from collabsim.services.simulation_service import SimulationService
from collabsim.services.scenario import ComparisonMetric, RunReport, ScenarioSpec
from collabsim.utils.logger import configure_logging

SETTABLE_KEYS = {*SimulationParameters.field_names(), "human_share"}


def _fail(ctx: click.Context, result: Result) -> NoReturn:
    message = f"error: {result.error}"
    if result.suggestions:
        message += f" (try: {'; '.join(result.suggestions)})"
    click.echo(message, err=True)
    ctx.exit(result.exit_code)


def _parse_set(ctx: click.Context, param: click.Parameter, values: Tuple[str, ...]) -> Dict[str, str]:
    assignments: Dict[str, str] = {}
    for item in values:
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or not key:
            raise click.BadParameter(f"'{item}' is not KEY=VALUE", ctx=ctx, param=param)
        name = key.split(".", 1)[1] if key.startswith(("parameters.", "allocation.")) else key
        if name not in SETTABLE_KEYS:
            raise click.BadParameter(
                f"unknown key '{key}'; choose from {', '.join(sorted(SETTABLE_KEYS))}",
                ctx=ctx,
                param=param
            )
        assignments[key] = value.strip()
    return assignments


def _int_list(ctx: click.Context, param: click.Parameter, value: Optional[str]) -> Optional[Tuple[int, ...]]:
    if value is None:
        return None
    try:
        return tuple(int(part) for part in value.split(",") if part.strip())
    except ValueError:
        raise click.BadParameter(f"'{value}' is not a comma separated list of model ids") from None


def _float_list(ctx: click.Context, param: click.Parameter, value: Optional[str]) -> Optional[Tuple[float, ...]]:
    if value is None:
        return None
    try:
        values = tuple(float(part) for part in value.split(",") if part.strip())
    except ValueError:
        raise click.BadParameter(f"'{value}' is not a comma separated list of numbers") from None
    if not values:
        raise click.BadParameter("at least one value is required")
    return values


def common_options(func: Callable[..., Any]) -> Callable[..., Any]:
    """--config, --set and --verbose, plus building the service from them."""
    @click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False, path_type=Path),
                  help="YAML config document")
    @click.option("--set", "assignments", multiple=True, callback=_parse_set, metavar="KEY=VALUE",
                  help="Override one parameter (repeatable)")
    @click.option("--verbose", "-v", is_flag=True, help="Debug logging on stderr")
    @click.pass_context
    @wraps(func)
    def wrapper(
        ctx: click.Context,
        config_path: Optional[Path],
        assignments: Dict[str, str],
        verbose: bool,
        **kwargs: Any
    ) -> Any:
        if verbose:
            configure_logging("DEBUG")
        try:
            document = apply_set_overrides(load_config(config_path), assignments)
        except CollabSimError as e:
            _fail(ctx, Result.from_error(e))
        except OSError as e:
            _fail(ctx, Result.fail(f"Cannot read {config_path}: {e.strerror or e}"))
        return ctx.invoke(func, SimulationService(document), **kwargs)
    return wrapper


def _print_report(report: RunReport, csv_path: Optional[Path]) -> None:
    frame = report_frame(report)
    click.echo(frame.to_string(index=False, float_format=lambda v: f"{v:.6e}"))
    if csv_path is not None:
        write_csv(report, csv_path)
        click.echo(f"wrote {csv_path}", err=True)


def _emit(result: Result[RunReport], csv_path: Optional[Path]) -> None:
    ctx = click.get_current_context()
    if not result.success:
        _fail(ctx, result)
    assert result.data is not None
    try:
        _print_report(result.data, csv_path)
    except CollabSimError as e:
        _fail(ctx, Result.from_error(e))


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="collabsim")
def cli() -> None:
    """Human-AI collaboration production model simulator."""


@cli.command()
@click.option("--model", "model_id", type=click.IntRange(1, 5), required=True, help="Model 1..5")
@click.option("--horizon", type=click.IntRange(min=1), help="Years to simulate")
@click.option("--decompose", is_flag=True, help="Also print the human and AI terms (Models 4/5)")
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False, path_type=Path), help="Write the report as CSV")
@common_options
def simulate(
    service: SimulationService,
    model_id: int,
    horizon: Optional[int],
    decompose: bool,
    csv_path: Optional[Path]
) -> None:
    """Output trajectory of one model."""
    _emit(service.simulate(model_id, horizon, decompose=decompose), csv_path)


@cli.command()
@click.option("--models", "model_ids", required=True, callback=_int_list, metavar="A,B",
              help="Model A compared against baseline B, e.g. 3,2")
@click.option("--horizon", type=click.IntRange(min=1), help="Years to simulate")
@click.option("--metric", type=click.Choice(["percent_gain", "absolute_gap"]), default="percent_gain",
              show_default=True)
@click.option("--match-ai-share", is_flag=True, help="Give Model 2/3 the AI share omega")
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False, path_type=Path), help="Write the report as CSV")
@common_options
def compare(
    service: SimulationService,
    model_ids: Tuple[int, ...],
    horizon: Optional[int],
    metric: str,
    match_ai_share: bool,
    csv_path: Optional[Path]
) -> None:
    """Two models side by side with the derived gain."""
    result = service.compare(
        model_ids, horizon, metric=cast(ComparisonMetric, metric), match_ai_share=match_ai_share
    )
    _emit(result, csv_path)


@cli.command()
@click.option("--param", "parameter", required=True, type=click.Choice(SimulationParameters.field_names()),
              help="Parameter to vary")
@click.option("--values", required=True, callback=_float_list, metavar="V1,V2,...", help="Values to try")
@click.option("--models", "model_ids", default="4", callback=_int_list, show_default=True, metavar="A,B,...")
@click.option("--horizon", type=click.IntRange(min=1), help="Years to simulate")
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False, path_type=Path), help="Write the report as CSV")
@common_options
def sweep(
    service: SimulationService,
    parameter: str,
    values: Tuple[float, ...],
    model_ids: Tuple[int, ...],
    horizon: Optional[int],
    csv_path: Optional[Path]
) -> None:
    """One trajectory per parameter value."""
    _emit(service.sweep(parameter, values, model_ids, horizon), csv_path)


@cli.command()
@click.option("--year", type=float, help="Evaluation year (default from settings)")
@click.option("--path", "by_year", is_flag=True, help="Best share in every year of the horizon instead")
@click.option("--horizon", type=click.IntRange(min=1), help="Years for --path")
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False, path_type=Path), help="Write the share profile")
@common_options
def optimize(
    service: SimulationService,
    year: Optional[float],
    by_year: bool,
    horizon: Optional[int],
    csv_path: Optional[Path]
) -> None:
    """Human resource share maximising Model 2 output."""
    ctx = click.get_current_context()
    if by_year:
        if year is not None:
            _fail(ctx, Result.fail("--year and --path cannot be combined", exit_code=2))
        _emit(service.allocation_path(horizon), csv_path)
        return
    result = service.optimize(year)
    if not result.success:
        _fail(ctx, result)
    allocation = result.data
    assert allocation is not None
    click.echo(f"best_share {allocation.best_share:.6f}")
    click.echo(f"best_output {allocation.best_output:.6e}")
    click.echo(f"year {allocation.t:g}")
    if allocation.non_unimodal:
        peaks = ", ".join(f"{x:.3f}" for x in allocation.local_maxima)
        click.echo(f"warning: output profile has several local maxima at shares {peaks}", err=True)
    if csv_path is not None:
        spec = ScenarioSpec(name="optimize", kind="allocation", model_ids=(2,), allocation_year=allocation.t)
        report = RunReport(spec=spec, parameters=service.parameters, allocation=allocation)
        try:
            write_csv(report, csv_path)
        except CollabSimError as e:
            _fail(ctx, Result.from_error(e))


@cli.command()
@click.option("--anchors", "anchors_path", type=click.Path(exists=True, dir_okay=False, path_type=Path),
              help="YAML file with human, ai and ai_scenario blocks")
@click.option("--variant", type=click.Choice([v.value for v in CalibrationVariant]),
              default=CalibrationVariant.ENHANCED.value, show_default=True)
@common_options
def calibrate(service: SimulationService, anchors_path: Optional[Path], variant: str) -> None:
    """Back-solve phi0, phiH and phiA from GDP anchors."""
    ctx = click.get_current_context()
    anchors: Optional[AnchorSet] = None
    if anchors_path is not None:
        try:
            anchors = load_anchors(anchors_path)
        except CollabSimError as e:
            _fail(ctx, Result.from_error(e))
    result = service.calibrate(anchors, CalibrationVariant(variant))
    if not result.success:
        _fail(ctx, result)
    calibration = result.data
    assert calibration is not None
    human_err, ai_err = round_trip_error(calibration, service.parameters)
    click.echo(f"phi0 {calibration.phi0:.6f}")
    click.echo(f"phiH {calibration.phiH:.6f}")
    click.echo(f"phiA {calibration.phiA:.6f}")
    click.echo(f"phiA_reference {calibration.reference_phiA:g} (deviation {100 * calibration.phiA_deviation:+.2f}%)")
    click.echo(f"variant {calibration.variant.value}")
    click.echo(f"round_trip_error human={human_err:.3e} ai={ai_err:.3e}")


@cli.command()
@click.option("--output-dir", type=click.Path(file_okay=False, path_type=Path), help="Directory for CSV and SVG files")
@common_options
def figures(service: SimulationService, output_dir: Optional[Path]) -> None:
    """Run the figure catalog and write one CSV and one SVG per figure."""
    result = service.figures(output_dir)
    if not result.success:
        _fail(click.get_current_context(), result)
    for artifact in result.data or []:
        click.echo(f"{artifact.name}: {artifact.csv_path} {artifact.svg_path}")


@cli.command("config")
@click.option("--provenance", is_flag=True, help="Print units and sources of every parameter instead")
@common_options
def show_config(service: SimulationService, provenance: bool) -> None:
    """Print the fully resolved config document."""
    if not provenance:
        click.echo(dump_config(service.document), nl=False)
        return
    frame = pd.DataFrame([
        {
            "parameter": name,
            "baseline": record.value,
            "resolved": getattr(service.parameters, name),
            "unit": record.unit,
            "source": record.source,
        }
        for name, record in baseline_provenance().items()
    ])
    click.echo(frame.to_string(index=False, float_format=lambda v: f"{v:.6g}"))


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return its exit status instead of exiting."""
    try:
        rv = cli.main(
            args=list(argv) if argv is not None else None,
            prog_name="collabsim",
            standalone_mode=False
        )
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return rv if isinstance(rv, int) else 0


def run() -> None:
    sys.exit(cli_main())
