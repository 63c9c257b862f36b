"""Error types for collabsim."""
from typing import Optional, List, Dict, Any


class CollabSimError(Exception):
    """Base class for simulation errors.

    ``exit_code`` is what the CLI exits with when the error reaches it.
    """
    exit_code = 1

    def __init__(
        self,
        message: str,
        suggestions: Optional[List[str]] = None,
        metadata: Optional[Dict[str, Any]] = None
    ):
        self.message = message
        self.suggestions = suggestions or []
        self.metadata = metadata or {}
        super().__init__(message)


class ParameterValidationError(CollabSimError):
    """A parameter value violates a model invariant."""

    def __init__(
        self,
        message: str,
        key: Optional[str] = None,
        invariant: Optional[str] = None,
        suggestions: Optional[List[str]] = None
    ):
        super().__init__(
            message,
            suggestions=suggestions,
            metadata={"key": key, "invariant": invariant}
        )
        self.key = key
        self.invariant = invariant


class PenetrationDomainError(CollabSimError):
    """Penetration rate left [0, 1): more agents than people."""
    pass


class ResourceSplitError(CollabSimError):
    """Resource partition unusable (zero human or negative AI resources)."""
    pass


class InfeasibleAnchorError(CollabSimError):
    """Human output alone reaches the observed GDP; no AI residual left."""
    pass


class ConfigParseError(CollabSimError):
    """Config document could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        location = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(
            f"{message}{location}",
            metadata={"line": line, "column": column}
        )
        self.line = line
        self.column = column


class ScenarioError(CollabSimError):
    """Scenario is inconsistent or cannot be run."""
    pass


class ReportError(CollabSimError):
    """Report cannot be serialized."""
    pass


class ChartError(CollabSimError):
    """Chart cannot be rendered."""
    pass


class OutputWriteError(CollabSimError):
    """Writing an output file failed."""

    def __init__(self, path: Any, reason: str):
        super().__init__(f"Cannot write {path}: {reason}", metadata={"path": str(path)})
        self.path = path


class OutputOverflowError(CollabSimError):
    """A model evaluation left the finite float range."""

    def __init__(self, model_id: int, t: float, quantity: str = "output"):
        super().__init__(
            f"Model {model_id} {quantity} is not finite at t={t:g}",
            suggestions=["Lower the efficiency constants, exponents or resource levels"],
            metadata={"model_id": model_id, "t": t, "quantity": quantity}
        )
        self.model_id = model_id
        self.t = t


class NonUnimodalWarning(UserWarning):
    """Allocation profile has several separated local maxima."""
    pass
