"""Run report to CSV."""
from pathlib import Path

import pandas as pd

from collabsim.domain.errors import OutputWriteError, ReportError
from collabsim.services.scenario import RunReport
from collabsim.utils.logger import get_logger

logger = get_logger(__name__)

# 17 significant digits reproduce every double exactly
FLOAT_FORMAT = "%.16e"


def report_frame(report: RunReport) -> pd.DataFrame:
    """Tabulate a report: one row per year (or per share for allocations).

    Raises:
        ReportError: The report holds no data or its series differ in length
    """
    if report.is_empty:
        raise ReportError(f"Report '{report.spec.name}' has no series to write")

    if report.allocation is not None:
        return pd.DataFrame({
            "human_share": report.allocation.shares,
            "Model 2 output": report.allocation.outputs,
        })

    series = report.all_series
    lengths = {len(ts) for ts in series}
    if len(lengths) != 1:
        raise ReportError(
            f"Report '{report.spec.name}' mixes series of lengths {sorted(lengths)}",
            metadata={"scenario": report.spec.name}
        )
    frame = pd.DataFrame({"year": series[0].years})
    for ts in series:
        frame[ts.name] = ts.as_array()
    return frame


def write_csv(report: RunReport, path: Path) -> Path:
    """Write a report as CSV.

    The header is ``year,<series names>`` (``human_share,...`` for
    allocation reports) and floats use full-precision scientific notation,
    so identical reports give identical bytes.

    Raises:
        ReportError: Empty report
        OutputWriteError: The file cannot be written
    """
    frame = report_frame(report)
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    except OSError as e:
        raise OutputWriteError(path, e.strerror or str(e)) from e

    logger.debug("CSV written", path=str(path), rows=len(frame), columns=list(frame.columns))
    return path
