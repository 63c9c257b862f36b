"""Closed-form production models."""
from .production import (
    MODEL_IDS,
    logistic_capability,
    effective_ai_resources,
    model1_output,
    model2_output,
    penetration_rate,
    network_multiplier,
    network_state,
    model3_output,
    model4_human_output,
    model4_ai_output,
    model4_output,
    model5_output,
    model_components,
    evaluate_model,
)

__all__ = [
    'MODEL_IDS',
    'logistic_capability',
    'effective_ai_resources',
    'model1_output',
    'model2_output',
    'penetration_rate',
    'network_multiplier',
    'network_state',
    'model3_output',
    'model4_human_output',
    'model4_ai_output',
    'model4_output',
    'model5_output',
    'model_components',
    'evaluate_model',
]
