"""Production functions of the five human-AI collaboration models.

Every function is pure: outputs depend only on the arguments, nothing is
cached or mutated, so evaluations may run from any number of threads.

Exponent convention is ``N**alpha * R**(1 - alpha)`` throughout (labour
carries alpha). Model ids:

    1  pure human collaboration
    2  AI as collaborator (efficiency multiplier on human output)
    3  model 2 amplified by the network multiplier
    4  humans and AI as independent producers
    5  model 4 with the network multiplier on the AI term
"""
import math
from typing import Callable, Optional, Tuple

from collabsim.domain.errors import (
    OutputOverflowError,
    PenetrationDomainError,
    ResourceSplitError,
    ScenarioError,
)
from collabsim.domain.types import (
    AgentTrajectory,
    CapabilityCurve,
    NetworkState,
    ResourceSplit,
    SimulationParameters,
)

MODEL_IDS: Tuple[int, ...] = (1, 2, 3, 4, 5)


def logistic_capability(curve: CapabilityCurve, t: float) -> float:
    """AI capability index s(t) = 1 / (1 + exp(-k (t - t0))).

    Evaluated in the overflow-free form; s(t0) is exactly 0.5.
    """
    z = curve.k * (t - curve.t0)
    if z >= 0:
        return 1.0 / (1.0 + math.exp(-z))
    e = math.exp(z)
    return e / (1.0 + e)


def effective_ai_resources(R_A: float, delta: float, s: float) -> float:
    """Capability-enhanced AI resources (1 + delta*s) * R_A."""
    if R_A < 0:
        raise ResourceSplitError(
            f"AI resources must be non-negative, got {R_A}",
            metadata={"R_A": R_A}
        )
    return (1.0 + delta * s) * R_A


def _cobb_douglas(phi: float, labour: float, alpha: float, resources: float) -> float:
    # 0**alpha is 0 for alpha > 0, so an empty factor yields zero output
    return phi * labour ** alpha * resources ** (1.0 - alpha)


def model1_output(params: SimulationParameters) -> float:
    """Pure human output phi0 * N^alpha * R^(1-alpha); time invariant."""
    return _cobb_douglas(params.phi0, params.N, params.alpha, params.R)


def _collaboration_multiplier(params: SimulationParameters, split: ResourceSplit, t: float) -> float:
    R_H = split.R_H
    if R_H <= 0:
        raise ResourceSplitError(
            "Human resources must be positive for the AI/human resource ratio",
            metadata={"R_H": R_H, "human_share": split.human_share}
        )
    s = logistic_capability(params.capability_curve, t)
    ratio = split.R_A / R_H
    return 1.0 + params.gamma * ratio ** params.beta * (1.0 + params.delta * s) ** params.beta


def model2_output(params: SimulationParameters, split: ResourceSplit, t: float) -> float:
    """Human output on R_H scaled by the AI collaboration multiplier.

    Raises:
        ResourceSplitError: If R_H is zero
    """
    multiplier = _collaboration_multiplier(params, split, t)
    return _cobb_douglas(params.phi0, params.N, params.alpha, split.R_H) * multiplier


def penetration_rate(traj: AgentTrajectory, N: float, t: float) -> float:
    """AI penetration p = A(t) / N.

    Raises:
        PenetrationDomainError: If p falls outside [0, 1)
    """
    agents = traj.count(t)
    p = agents / N
    if p >= 1.0 or p < 0.0:
        raise PenetrationDomainError(
            f"Penetration rate {p:.6g} at t={t:g} is outside [0, 1) "
            f"({agents:.6g} agents for population {N:.6g})",
            suggestions=["Lower A0 or g", "Shorten the horizon"],
            metadata={"t": t, "p": p, "agents": agents, "N": N}
        )
    return p


def network_multiplier(eta: float, p: float) -> float:
    """Metcalfe-style multiplier Theta(p) = 1 + eta * p^2."""
    return 1.0 + eta * p * p


def network_state(params: SimulationParameters, t: float) -> NetworkState:
    p = penetration_rate(params.agent_trajectory, params.N, t)
    return NetworkState(p=p, theta=network_multiplier(params.eta, p))


def model3_output(params: SimulationParameters, split: ResourceSplit, t: float) -> float:
    """Model 2 output times the network multiplier."""
    return model2_output(params, split, t) * network_state(params, t).theta


def model4_human_output(params: SimulationParameters, t: float = 0.0) -> float:
    """Independent human output phiH * N^alpha * ((1-omega) R)^(1-alpha).

    ``t`` is accepted for a uniform signature; the term is time invariant.
    """
    return _cobb_douglas(params.phiH, params.N, params.alpha, (1.0 - params.omega) * params.R)


def model4_ai_output(params: SimulationParameters, t: float) -> float:
    """Independent AI output phiA * A(t)^alpha * (omega R (1 + delta s(t)))^(1-alpha).

    Zero when there are no agents.
    """
    agents = params.agent_trajectory.count(t)
    if agents <= 0:
        return 0.0
    s = logistic_capability(params.capability_curve, t)
    resources = effective_ai_resources(params.omega * params.R, params.delta, s)
    return _cobb_douglas(params.phiA, agents, params.alpha, resources)


def model4_output(params: SimulationParameters, t: float) -> float:
    return model4_human_output(params, t) + model4_ai_output(params, t)


def model5_output(params: SimulationParameters, t: float) -> float:
    """Model 4 with the network multiplier applied to the AI term only."""
    theta = network_state(params, t).theta
    return model4_human_output(params, t) + model4_ai_output(params, t) * theta


def _finite(model_id: int, t: float, evaluate: Callable[[], float]) -> float:
    # float ** float raises OverflowError where float * float gives inf
    try:
        value = evaluate()
    except OverflowError:
        raise OutputOverflowError(model_id, t) from None
    if not math.isfinite(value):
        raise OutputOverflowError(model_id, t)
    return value


def model_components(model_id: int, params: SimulationParameters, t: float) -> Tuple[float, float]:
    """Human and AI terms of Model 4 or 5 (AI term includes Theta for Model 5).

    Raises:
        OutputOverflowError: If either term is not finite
    """
    if model_id not in (4, 5):
        raise ScenarioError(f"Model {model_id} has no independent components")
    human = _finite(model_id, t, lambda: model4_human_output(params, t))
    theta = network_state(params, t).theta if model_id == 5 else 1.0
    ai = _finite(model_id, t, lambda: model4_ai_output(params, t) * theta)
    return human, ai


def _evaluate(
    model_id: int,
    params: SimulationParameters,
    t: float,
    split: Optional[ResourceSplit]
) -> float:
    if model_id == 1:
        return model1_output(params)
    if model_id in (2, 3):
        if split is None:
            raise ScenarioError(f"Model {model_id} needs a resource split")
        if model_id == 2:
            return model2_output(params, split, t)
        return model3_output(params, split, t)
    if model_id == 4:
        return model4_output(params, t)
    if model_id == 5:
        return model5_output(params, t)
    raise ScenarioError(
        f"Unknown model id {model_id}",
        suggestions=[f"Use one of {', '.join(map(str, MODEL_IDS))}"]
    )


def evaluate_model(
    model_id: int,
    params: SimulationParameters,
    t: float,
    split: Optional[ResourceSplit] = None
) -> float:
    """Evaluate one of the five models at time t.

    Args:
        model_id: 1..5
        params: Parameter vector
        t: Time in years (continuous values allowed)
        split: Resource split for Models 2 and 3

    Returns:
        Total social output

    Raises:
        OutputOverflowError: Valid parameters drove the output past the float range
    """
    return _finite(model_id, t, lambda: _evaluate(model_id, params, t, split))
