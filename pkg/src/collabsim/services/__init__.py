"""Calibration, allocation search, scenario runs and the service facade."""
from .base_service import BaseService, Result
from .calibration import (
    AiCalibrationScenario,
    AnchorObservation,
    AnchorSet,
    CalibrationResult,
    CalibrationVariant,
    calibrate,
    calibrate_phi0,
    calibrate_phiA,
    round_trip_error,
    scenario_point,
)
from .optimizer import (
    AllocationResult,
    allocation_path,
    golden_section_max,
    optimize_human_share,
    sweep_omega,
)
from .scenario import (
    Comparison,
    RunReport,
    ScenarioSpec,
    SweepAxis,
    experiment_catalog,
    run_catalog,
    run_scenario,
)

__all__ = [
    'BaseService', 'Result',
    'AiCalibrationScenario', 'AnchorObservation', 'AnchorSet', 'CalibrationResult',
    'CalibrationVariant', 'calibrate', 'calibrate_phi0', 'calibrate_phiA',
    'round_trip_error', 'scenario_point',
    'AllocationResult', 'allocation_path', 'golden_section_max',
    'optimize_human_share', 'sweep_omega',
    'Comparison', 'RunReport', 'ScenarioSpec', 'SweepAxis',
    'experiment_catalog', 'run_catalog', 'run_scenario',
]
