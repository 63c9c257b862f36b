"""Tests for the simulation service facade."""
import pytest

from collabsim.config.loader import apply_set_overrides, load_config
from collabsim.config.settings import CollabSimSettings
from collabsim.services.calibration import CalibrationVariant
from collabsim.services.scenario import run_scenario
from collabsim.services.simulation_service import SimulationService


@pytest.fixture
def service():
    """Service over the baseline document."""
    return SimulationService()


def test_simulate(service):
    """Test simulating one model."""
    result = service.simulate(1)
    assert result.success
    assert result.exit_code == 0
    assert result.data.series["Model 1"].values[0] == pytest.approx(9.031e12, rel=1e-3)
    assert len(result.data.series["Model 1"]) == 20


def test_simulate_uses_document_share():
    """Test the document's human share feeds Models 2 and 3."""
    low = SimulationService(load_config("allocation:\n  human_share: 0.6\n")).simulate(2, horizon=3)
    high = SimulationService().simulate(2, horizon=3)
    assert low.success and high.success
    assert low.data.spec.human_share == 0.6
    assert low.data.series["Model 2"].values != high.data.series["Model 2"].values


def test_simulate_domain_error():
    """Test domain errors become failed results with exit code 1."""
    document = load_config("parameters:\n  A0: 7.0e8\n  g: 1.0e7\n")
    result = SimulationService(document).simulate(3)
    assert not result.success
    assert result.exit_code == 1
    assert result.metadata["error_type"] == "PenetrationDomainError"
    assert "Penetration rate" in result.error
    assert result.suggestions


def test_compare(service):
    """Test comparing two models."""
    result = service.compare([3, 2])
    assert result.success
    assert "Model 3 vs Model 2 percent gain" in result.data.derived

    gap = service.compare([4, 2], metric="absolute_gap", match_ai_share=True)
    assert gap.success
    assert all(v > 0 for v in gap.data.derived["Model 4 vs Model 2 absolute gap"].values)


def test_compare_usage_errors(service):
    """Test compare needs exactly two known models."""
    result = service.compare([3])
    assert not result.success
    assert result.exit_code == 2

    result = service.compare([3, 9])
    assert not result.success
    assert result.exit_code == 2


def test_sweep(service):
    """Test a parameter sweep."""
    result = service.sweep("omega", [0.05, 0.2], model_ids=[4], horizon=5)
    assert result.success
    assert list(result.data.series) == ["Model 4 (omega=0.05)", "Model 4 (omega=0.2)"]

    bad = service.sweep("omega", [1.5])
    assert not bad.success
    assert bad.exit_code == 2


def test_optimize(service):
    """Test the allocation optimum."""
    result = service.optimize()
    assert result.success
    assert result.data.best_share == pytest.approx(0.76, abs=0.02)

    earlier = service.optimize(year=5.0)
    assert earlier.data.t == 5.0


def test_allocation_path(service):
    """Test the year by year optimal share report."""
    result = service.allocation_path(horizon=21)
    assert result.success
    path = result.data.series["optimal human share"]
    assert len(path) == 21
    assert path.values[-1] == pytest.approx(service.optimize(20.0).data.best_share)

    assert service.allocation_path(horizon=-1).exit_code == 2


def test_calibrate(service):
    """Test calibration from the packaged anchors."""
    result = service.calibrate()
    assert result.success
    assert result.data.phi0 == pytest.approx(90.0, rel=0.02)
    assert result.data.variant == CalibrationVariant.ENHANCED

    unenhanced = service.calibrate(variant=CalibrationVariant.UNENHANCED)
    assert unenhanced.data.phiA > result.data.phiA


def test_calibrate_infeasible(service, anchors):
    """Test infeasible anchors fail with a diagnostic."""
    ai = anchors.ai.model_copy(update={"Y": 1e12})
    result = service.calibrate(anchors.model_copy(update={"ai": ai}))
    assert not result.success
    assert result.metadata["error_type"] == "InfeasibleAnchorError"


def test_scenarios_include_document(service):
    """Test document scenarios follow the catalog."""
    assert len(service.scenarios()) == 7
    document = load_config("scenarios:\n  - name: extra\n    model_ids: [1]\n    horizon: 2\n")
    names = [spec.name for spec in SimulationService(document).scenarios()]
    assert names[-1] == "extra"
    assert len(names) == 8


def test_scenarios_follow_overrides():
    """Test catalog scenarios take the overridden human share and allocation year."""
    document = apply_set_overrides(load_config(None), {"human_share": "0.6"})
    service = SimulationService(document, settings=CollabSimSettings(ALLOCATION_YEAR=12.0))
    specs = {spec.name: spec for spec in service.scenarios()}
    assert specs["fig1"].human_share == 0.6
    assert specs["fig4"].human_share == 0.6
    assert specs["fig2"].allocation_year == 12.0

    fig1 = run_scenario(specs["fig1"], service.parameters)
    simulated = service.simulate(2)
    assert fig1.series["Model 2"].values == simulated.data.series["Model 2"].values

    # Values set on a document scenario are kept
    document = load_config(
        "allocation:\n  human_share: 0.6\n"
        "scenarios:\n  - name: pinned\n    model_ids: [2]\n    human_share: 0.9\n    allocation_year: 5\n"
    )
    pinned = SimulationService(document).scenarios()[-1]
    assert pinned.human_share == 0.9
    assert pinned.allocation_year == 5.0


def test_simulate_output_overflow():
    """Test outputs past the float range become failed results with exit code 1."""
    result = SimulationService(load_config("parameters:\n  phi0: 1.0e300\n")).simulate(1, horizon=2)
    assert not result.success
    assert result.exit_code == 1
    assert result.metadata["error_type"] == "OutputOverflowError"
    assert "not finite" in result.error


def test_figures(service, tmp_path):
    """Test figures writes a CSV and an SVG per catalog entry."""
    result = service.figures(tmp_path)
    assert result.success
    assert [a.name for a in result.data] == [f"fig{i}" for i in range(1, 8)]
    assert len(list(tmp_path.glob("*.csv"))) == 7
    assert len(list(tmp_path.glob("*.svg"))) == 7
    for artifact in result.data:
        assert artifact.csv_path.exists()
        assert artifact.svg_path.exists()
