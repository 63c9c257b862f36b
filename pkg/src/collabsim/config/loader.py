"""Config document loading and dumping.

A document is YAML with four optional blocks::

    parameters:        # any SimulationParameters field
      alpha: 0.6
    allocation:
      human_share: 0.85
    anchors:           # human / ai / ai_scenario, see anchors.yaml
      ...
    scenarios:         # list of ScenarioSpec
      - name: custom
        model_ids: [2, 3]

Missing keys take the baseline defaults; unknown keys are rejected.
"""
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from collabsim.domain.errors import ConfigParseError, ParameterValidationError
from collabsim.domain.types import SimulationParameters, parameter_error_from
from collabsim.services.calibration import AnchorSet
from collabsim.services.scenario import ScenarioSpec
from collabsim.utils.logger import get_logger
from .defaults import DEFAULT_HUMAN_SHARE

logger = get_logger(__name__)


class AllocationBlock(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    human_share: float = Field(default=DEFAULT_HUMAN_SHARE, gt=0, le=1)


def default_anchors() -> AnchorSet:
    """Anchors shipped with the package."""
    text = resources.files("collabsim.config").joinpath("anchors.yaml").read_text(encoding="utf-8")
    return AnchorSet.model_validate(yaml.safe_load(text))


class ConfigDocument(BaseModel):
    """Fully resolved run configuration."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    parameters: SimulationParameters = Field(default_factory=SimulationParameters)
    allocation: AllocationBlock = Field(default_factory=AllocationBlock)
    anchors: AnchorSet = Field(default_factory=default_anchors)
    scenarios: List[ScenarioSpec] = []


def _parse_yaml(text: str) -> Any:
    try:
        return yaml.safe_load(text)
    except yaml.MarkedYAMLError as e:
        mark = e.problem_mark or e.context_mark
        line = mark.line + 1 if mark is not None else None
        column = mark.column + 1 if mark is not None else None
        raise ConfigParseError(f"Malformed config: {e.problem or e}", line=line, column=column) from e
    except yaml.YAMLError as e:
        raise ConfigParseError(f"Malformed config: {e}") from e


def load_config(source: Union[Path, str, None] = None) -> ConfigDocument:
    """Load and validate a config document.

    Args:
        source: A Path is read from disk; a str is the document text itself;
            None gives the baseline document

    Raises:
        ConfigParseError: Malformed YAML (with line and column) or a
            document that is not a mapping
        ParameterValidationError: A value breaks an invariant; the key is
            the dotted path, e.g. ``parameters.alpha``
        OSError: The file cannot be read
    """
    if source is None:
        return ConfigDocument()
    text = source.read_text(encoding="utf-8") if isinstance(source, Path) else source

    raw = _parse_yaml(text)
    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        raise ConfigParseError(f"Config must be a mapping of blocks, got {type(raw).__name__}")

    try:
        document = ConfigDocument.model_validate(raw)
    except ValidationError as e:
        raise parameter_error_from(e) from e

    logger.debug(
        "Config loaded",
        source=str(source) if isinstance(source, Path) else "<text>",
        blocks=sorted(raw),
        scenarios=len(document.scenarios),
    )
    return document


def dump_config(document: ConfigDocument) -> str:
    """Serialize a document so that ``load_config`` reads it back equal."""
    data = document.model_dump(mode="json", exclude_defaults=False)
    # Scenarios keep only what they set, so unset shares still follow the
    # document; tuples dump as lists
    data["scenarios"] = [s.model_dump(mode="json", exclude_unset=True) for s in document.scenarios]
    for scenario in data["scenarios"]:
        for key in ("sweep", "comparison"):
            if scenario.get(key) is None:
                scenario.pop(key, None)
    return yaml.safe_dump(data, sort_keys=False, default_flow_style=False)


def _coerce(key: str, value: str) -> float:
    try:
        return float(value)
    except ValueError:
        raise ParameterValidationError(f"Override '{key}' needs a number, got '{value}'", key=key) from None


def apply_set_overrides(document: ConfigDocument, assignments: Mapping[str, str]) -> ConfigDocument:
    """Apply ``--set key=value`` overrides.

    Keys are parameter names (optionally ``parameters.`` prefixed) or
    ``human_share`` / ``allocation.human_share``.

    Raises:
        ParameterValidationError: Unknown key or invalid value
    """
    params: Dict[str, float] = {}
    human_share: Optional[float] = None
    for key, value in assignments.items():
        name = key.split(".", 1)[1] if key.startswith(("parameters.", "allocation.")) else key
        if name == "human_share":
            human_share = _coerce(key, value)
        else:
            params[name] = _coerce(key, value)

    updated = document.model_copy(update={"parameters": document.parameters.with_overrides(params)})
    if human_share is not None:
        try:
            allocation = AllocationBlock(human_share=human_share)
        except ValidationError as e:
            raise parameter_error_from(e, prefix="allocation") from e
        updated = updated.model_copy(update={"allocation": allocation})
    return updated


def load_anchors(source: Union[Path, str]) -> AnchorSet:
    """Load an anchors file: ``human``, ``ai`` and ``ai_scenario`` blocks,
    either at the top level or under an ``anchors`` key.

    Raises:
        ConfigParseError: Malformed YAML
        ParameterValidationError: Missing or invalid anchor values
    """
    text = source.read_text(encoding="utf-8") if isinstance(source, Path) else source
    raw = _parse_yaml(text)
    if not isinstance(raw, dict):
        raise ConfigParseError("Anchors file must be a mapping with human, ai and ai_scenario blocks")
    if set(raw) == {"anchors"}:
        raw = raw["anchors"]
    try:
        return AnchorSet.model_validate(raw)
    except ValidationError as e:
        raise parameter_error_from(e, prefix="anchors") from e
