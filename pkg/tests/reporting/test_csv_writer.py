"""Tests for CSV output."""
import pandas as pd
import pytest

from collabsim.domain.errors import OutputWriteError, ReportError
from collabsim.services.scenario import RunReport, ScenarioSpec, experiment_catalog, run_scenario
from collabsim.reporting import report_frame, write_csv


@pytest.fixture
def two_series_report(baseline):
    """Models 2 and 3 over 20 years, no comparison."""
    return run_scenario(ScenarioSpec(name="pair", model_ids=(2, 3), horizon=20), baseline)


def test_csv_layout(two_series_report, tmp_path):
    """Test header and row count."""
    path = write_csv(two_series_report, tmp_path / "pair.csv")
    lines = path.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 21
    assert lines[0] == "year,Model 2,Model 3"
    assert lines[1].startswith("0,")
    assert lines[-1].startswith("19,")
    # Full precision scientific notation
    assert "e+1" in lines[1]


def test_csv_values_round_trip(two_series_report, tmp_path):
    """Test re-reading the CSV reproduces every value."""
    path = write_csv(two_series_report, tmp_path / "pair.csv")
    frame = pd.read_csv(path)
    for name, series in two_series_report.series.items():
        for read, expected in zip(frame[name], series.values):
            assert read == pytest.approx(expected, rel=1e-12)


def test_csv_includes_derived(baseline, tmp_path):
    """Test derived comparison series follow the raw series."""
    fig4 = next(spec for spec in experiment_catalog() if spec.name == "fig4")
    path = write_csv(run_scenario(fig4, baseline), tmp_path / "fig4.csv")
    header = path.read_text(encoding="utf-8").splitlines()[0]
    assert header == "year,Model 2,Model 3,Model 3 vs Model 2 percent gain"


def test_csv_deterministic(two_series_report, tmp_path):
    """Test identical reports give identical bytes."""
    first = write_csv(two_series_report, tmp_path / "a.csv").read_bytes()
    second = write_csv(two_series_report, tmp_path / "b.csv").read_bytes()
    assert first == second


def test_allocation_csv(baseline, tmp_path):
    """Test allocation reports are keyed by human share."""
    fig2 = next(spec for spec in experiment_catalog() if spec.name == "fig2")
    report = run_scenario(fig2, baseline)
    path = write_csv(report, tmp_path / "fig2.csv")
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "human_share,Model 2 output"
    assert len(lines) == len(report.allocation.profile) + 1


def test_empty_report_rejected(baseline, tmp_path):
    """Test an empty report never produces a file."""
    report = RunReport(spec=ScenarioSpec(name="empty", model_ids=(1,)), parameters=baseline)
    target = tmp_path / "empty.csv"
    with pytest.raises(ReportError):
        write_csv(report, target)
    assert not target.exists()


def test_write_failure_has_path(two_series_report, tmp_path):
    """Test I/O failures carry the path."""
    with pytest.raises(OutputWriteError) as exc:
        write_csv(two_series_report, tmp_path)
    assert exc.value.metadata["path"] == str(tmp_path)


def test_report_frame(two_series_report):
    """Test the tabular view of a report."""
    frame = report_frame(two_series_report)
    assert list(frame.columns) == ["year", "Model 2", "Model 3"]
    assert frame["year"].tolist() == list(range(20))
