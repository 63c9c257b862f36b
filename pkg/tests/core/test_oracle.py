"""Float evaluations against an independent 50-digit decimal re-implementation."""
from decimal import Decimal, localcontext

import pytest

from collabsim.core.production import evaluate_model
from collabsim.domain.types import ResourceSplit, SimulationParameters
from tests.factories import SimulationParametersFactory

HUMAN_SHARE = Decimal("0.85")


def _d(x: float) -> Decimal:
    return Decimal(x)


def oracle_outputs(params: SimulationParameters, t: int) -> dict:
    """All five model outputs at t, computed in 50-digit decimal arithmetic."""
    with localcontext() as ctx:
        ctx.prec = 50
        one = Decimal(1)
        N, R, alpha = _d(params.N), _d(params.R), _d(params.alpha)
        beta, gamma, delta = _d(params.beta), _d(params.gamma), _d(params.delta)
        eta, omega = _d(params.eta), _d(params.omega)
        T = Decimal(t)

        s = one / (one + (-_d(params.k) * (T - _d(params.t0))).exp())
        agents = _d(params.A0) + _d(params.g) * T
        p = agents / N
        theta = one + eta * p * p

        def cobb_douglas(phi: Decimal, labour: Decimal, resources: Decimal) -> Decimal:
            if labour == 0 or resources == 0:
                return Decimal(0)
            return phi * labour ** alpha * resources ** (one - alpha)

        y1 = cobb_douglas(_d(params.phi0), N, R)

        R_H = R * HUMAN_SHARE
        R_A = R - R_H
        multiplier = one + gamma * (R_A / R_H) ** beta * (one + delta * s) ** beta
        y2 = cobb_douglas(_d(params.phi0), N, R_H) * multiplier
        y3 = y2 * theta

        human = cobb_douglas(_d(params.phiH), N, (one - omega) * R)
        ai = cobb_douglas(_d(params.phiA), agents, omega * R * (one + delta * s))
        y4 = human + ai
        y5 = human + ai * theta
        return {1: y1, 2: y2, 3: y3, 4: y4, 5: y5}


def test_oracle_at_baseline(baseline):
    """Test the baseline trajectory against the decimal oracle."""
    split = ResourceSplit.from_share(baseline.R, 0.85)
    for t in (0, 5, 10, 19):
        expected = oracle_outputs(baseline, t)
        for model_id, value in expected.items():
            assert evaluate_model(model_id, baseline, t, split) == pytest.approx(float(value), rel=1e-10)


def test_oracle_on_random_grid(seeded_random):
    """Test 100 (parameter vector, year) points for every model."""
    vectors = SimulationParametersFactory.build_batch(20)
    for params in vectors:
        split = ResourceSplit.from_share(params.R, 0.85)
        for t in (0, 3, 8, 14, 19):
            expected = oracle_outputs(params, t)
            for model_id, value in expected.items():
                assert evaluate_model(model_id, params, t, split) == pytest.approx(float(value), rel=1e-10)
