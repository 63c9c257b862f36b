"""Back-solving baseline efficiencies from GDP anchor observations.

The human efficiency comes from a year without AI (phi0 = phiH), the AI
efficiency from the residual of a later year once the human term on the
remaining (1 - omega) resources is subtracted.
"""
import math
from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from collabsim.core.production import model1_output, model4_output
from collabsim.domain.errors import InfeasibleAnchorError
from collabsim.domain.types import SimulationParameters
from collabsim.utils.logger import get_logger

logger = get_logger(__name__)

# Published rounded phiA; deviations are reported against it as a
# reference point, not as ground truth.
PUBLISHED_PHI_A = 481.0


class AnchorObservation(BaseModel):
    """Observed GDP, population and capital stock for one year."""
    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    year_label: str
    Y: float = Field(gt=0)
    N: float = Field(gt=0)
    R: float = Field(gt=0)


class AiCalibrationScenario(BaseModel):
    """Assumed AI state at the AI anchor."""
    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    omega: float = Field(gt=0, lt=1)
    s: float = Field(gt=0, lt=1)
    delta: float = Field(gt=0)
    A: float = Field(gt=0)


class AnchorSet(BaseModel):
    """Anchors used for a full calibration."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    human: AnchorObservation
    ai: AnchorObservation
    ai_scenario: AiCalibrationScenario


class CalibrationVariant(str, Enum):
    ENHANCED = "enhanced"      # exact inverse of the independent AI production term
    UNENHANCED = "unenhanced"  # drops the (1 + delta*s) capability factor


class CalibrationResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    phi0: float
    phiH: float
    phiA: float
    alpha: float
    variant: CalibrationVariant
    anchors: AnchorSet
    human_output: float
    ai_output: float
    reference_phiA: float = PUBLISHED_PHI_A

    @property
    def phiA_deviation(self) -> float:
        """Relative deviation of phiA from the published reference value."""
        return (self.phiA - self.reference_phiA) / self.reference_phiA


def calibrate_phi0(anchor: AnchorObservation, alpha: float) -> float:
    """phi0 = Y / (N^alpha R^(1-alpha)); reproduces the anchor through Model 1."""
    return anchor.Y / (anchor.N ** alpha * anchor.R ** (1.0 - alpha))


def human_residual(
    anchor: AnchorObservation,
    phiH: float,
    alpha: float,
    omega: float
) -> Tuple[float, float]:
    """Split anchor GDP into the human term and the AI residual."""
    human = phiH * anchor.N ** alpha * ((1.0 - omega) * anchor.R) ** (1.0 - alpha)
    return human, anchor.Y - human


def calibrate_phiA(
    anchor: AnchorObservation,
    phiH: float,
    alpha: float,
    scen: AiCalibrationScenario,
    variant: CalibrationVariant = CalibrationVariant.ENHANCED
) -> float:
    """Solve the AI efficiency from the residual Y_A = Y - Y_H.

    Args:
        anchor: Observation the independent-producer model must reproduce
        phiH: Human efficiency (usually from ``calibrate_phi0``)
        alpha: Labour output elasticity
        scen: Assumed omega, s, delta and agent count at the anchor
        variant: ENHANCED inverts the AI term exactly; UNENHANCED omits
            the capability factor

    Returns:
        phiA such that human + AI output equals the anchor GDP

    Raises:
        InfeasibleAnchorError: If the human term alone reaches the anchor GDP
    """
    human, residual = human_residual(anchor, phiH, alpha, scen.omega)
    if residual <= 0:
        raise InfeasibleAnchorError(
            f"Human output {human:.6g} already reaches anchor {anchor.year_label} "
            f"GDP {anchor.Y:.6g}; no residual left for AI",
            suggestions=["Lower phiH", "Raise omega", "Check the anchor GDP"],
            metadata={"anchor": anchor.year_label, "human_output": human, "Y": anchor.Y}
        )
    enhancement = 1.0 + scen.delta * scen.s if variant == CalibrationVariant.ENHANCED else 1.0
    denominator = scen.A ** alpha * (scen.omega * anchor.R * enhancement) ** (1.0 - alpha)
    return residual / denominator


def scenario_point(
    anchor: AnchorObservation,
    scen: AiCalibrationScenario,
    phiH: float,
    phiA: float,
    base: Optional[SimulationParameters] = None
) -> Tuple[SimulationParameters, float]:
    """Parameters and time at which Model 4 sits exactly on the AI scenario.

    The agent count is frozen at ``scen.A`` (g = 0) and t is placed where
    the capability curve equals ``scen.s``.
    """
    base = base or SimulationParameters()
    params = base.with_overrides({
        "N": anchor.N,
        "R": anchor.R,
        "omega": scen.omega,
        "delta": scen.delta,
        "A0": scen.A,
        "g": 0.0,
        "phiH": phiH,
        "phiA": phiA,
    })
    t = params.t0 + math.log(scen.s / (1.0 - scen.s)) / params.k
    return params, t


def calibrate(
    anchors: AnchorSet,
    alpha: float,
    variant: CalibrationVariant = CalibrationVariant.ENHANCED
) -> CalibrationResult:
    """Run the two-anchor calibration.

    Args:
        anchors: Human (pre-AI) anchor, AI anchor and AI scenario
        alpha: Labour output elasticity
        variant: Inverse used for phiA

    Returns:
        CalibrationResult with phi0 = phiH and phiA
    """
    phi0 = calibrate_phi0(anchors.human, alpha)
    phiA = calibrate_phiA(anchors.ai, phi0, alpha, anchors.ai_scenario, variant)
    human, residual = human_residual(anchors.ai, phi0, alpha, anchors.ai_scenario.omega)

    result = CalibrationResult(
        phi0=phi0,
        phiH=phi0,
        phiA=phiA,
        alpha=alpha,
        variant=variant,
        anchors=anchors,
        human_output=human,
        ai_output=residual,
    )
    logger.info(
        "Calibration complete",
        phi0=phi0,
        phiA=phiA,
        variant=variant.value,
        human_anchor=anchors.human.year_label,
        ai_anchor=anchors.ai.year_label,
    )
    return result


def round_trip_error(
    result: CalibrationResult,
    base: Optional[SimulationParameters] = None
) -> Tuple[float, float]:
    """Relative errors reproducing both anchors from the calibrated values.

    Only the ENHANCED variant is an exact inverse; UNENHANCED misses the AI
    anchor by the capability factor.
    """
    base = base or SimulationParameters()
    human = result.anchors.human
    human_params = base.with_overrides({
        "N": human.N, "R": human.R, "alpha": result.alpha, "phi0": result.phi0,
    })
    human_error = abs(model1_output(human_params) - human.Y) / human.Y

    ai = result.anchors.ai
    point, t = scenario_point(
        ai, result.anchors.ai_scenario, result.phiH, result.phiA,
        base.with_overrides({"alpha": result.alpha})
    )
    ai_error = abs(model4_output(point, t) - ai.Y) / ai.Y
    return human_error, ai_error
