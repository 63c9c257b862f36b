"""SVG line charts.

Rendering goes through a bare matplotlib Figure (no pyplot state). A fixed
hash salt and a dropped Date field make the SVG bytes depend only on the
chart spec.
"""
from pathlib import Path
from typing import List, Optional, Tuple

import matplotlib
from matplotlib.figure import Figure
from pydantic import BaseModel, ConfigDict

from collabsim.config.settings import get_settings
from collabsim.domain.errors import ChartError, OutputWriteError
from collabsim.services.scenario import RunReport
from collabsim.utils.logger import get_logger

logger = get_logger(__name__)


class ChartSeries(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    x: Tuple[float, ...]
    y: Tuple[float, ...]


class ChartSpec(BaseModel):
    """Line chart: every series must share the same x values."""
    model_config = ConfigDict(frozen=True)

    title: str
    x_label: str
    y_label: str
    series: Tuple[ChartSeries, ...]


def _validate(chart: ChartSpec) -> None:
    if not chart.series:
        raise ChartError(f"Chart '{chart.title}' has no series")
    for s in chart.series:
        if len(s.x) != len(s.y):
            raise ChartError(f"Series '{s.name}' has {len(s.x)} x values but {len(s.y)} y values")
        if len(s.x) < 2:
            raise ChartError(
                f"Series '{s.name}' has {len(s.x)} point(s); a line needs at least two",
                suggestions=["Use a horizon of at least 2 years"]
            )
    domain = chart.series[0].x
    for s in chart.series[1:]:
        if s.x != domain:
            raise ChartError(
                f"Series '{s.name}' does not share the x values of '{chart.series[0].name}'"
            )


def write_svg_chart(chart: ChartSpec, path: Path, salt: Optional[str] = None) -> Path:
    """Render a chart to a standalone SVG file.

    Each series is drawn as one line with group id ``series-<index>``.

    Raises:
        ChartError: No series, a single-point series or mismatched x domains
        OutputWriteError: The file cannot be written
    """
    _validate(chart)
    salt = salt if salt is not None else get_settings().SVG_HASH_SALT
    path = Path(path)

    with matplotlib.rc_context({"svg.hashsalt": salt, "svg.fonttype": "none"}):
        fig = Figure(figsize=(8, 5))
        ax = fig.add_subplot()
        for idx, s in enumerate(chart.series):
            ax.plot(s.x, s.y, label=s.name, gid=f"series-{idx}", linewidth=1.5)
        ax.set_title(chart.title)
        ax.set_xlabel(chart.x_label)
        ax.set_ylabel(chart.y_label)
        ax.grid(True, alpha=0.3)
        ax.legend()
        fig.tight_layout()
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            fig.savefig(path, format="svg", metadata={"Date": None})
        except OSError as e:
            raise OutputWriteError(path, e.strerror or str(e)) from e

    logger.debug("SVG written", path=str(path), series=len(chart.series))
    return path


def chart_from_report(report: RunReport) -> ChartSpec:
    """Chart the raw series of a report; derived comparisons stay in the CSV."""
    title = report.spec.title or report.spec.name
    if report.allocation is not None:
        allocation = report.allocation
        return ChartSpec(
            title=title,
            x_label="Human resource share R_H / R",
            y_label="Total output (USD)",
            series=(ChartSeries(
                name=f"Model 2 output (t={allocation.t:g})",
                x=tuple(allocation.shares),
                y=tuple(allocation.outputs),
            ),),
        )

    series: List[ChartSeries] = [
        ChartSeries(name=ts.name, x=tuple(float(y) for y in ts.years), y=ts.values)
        for ts in report.series.values()
    ]
    y_label = "Network multiplier" if report.spec.kind == "network_multiplier" else "Total output (USD)"
    return ChartSpec(title=title, x_label="Year", y_label=y_label, series=tuple(series))
