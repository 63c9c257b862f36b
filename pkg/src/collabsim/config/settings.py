"""Process settings for collabsim."""
from functools import lru_cache
from pathlib import Path
from typing import Optional
from pydantic import field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


# Get project root directory (3 levels up from this file)
PROJECT_ROOT = Path(__file__).parent.parent.parent.parent


class CollabSimSettings(BaseSettings):
    """Application settings with environment variable support.

    Model parameters are deliberately absent: they belong to the config
    document so a run is reproducible from that document alone.
    """

    # Logging
    LOG_LEVEL: str = "WARNING"
    LOG_FILE: Optional[Path] = None
    LOG_FORMAT: str = "detailed"  # simple, detailed
    LOG_RETENTION_DAYS: int = 7
    LOG_ROTATION_SIZE_MB: int = 1

    # Output
    OUTPUT_DIR: Path = Path("out")
    SVG_HASH_SALT: str = "collabsim"
    FIGURE_WORKERS: int = 1

    # Simulation horizon (t = 0 .. horizon - 1)
    DEFAULT_HORIZON: int = 20

    # Allocation search
    ALLOCATION_YEAR: float = 20.0
    GRID_POINTS: int = 200
    SEARCH_TOLERANCE: float = 1e-4
    SEARCH_INTERVAL_LOW: float = 0.01
    SEARCH_INTERVAL_HIGH: float = 0.999

    model_config = SettingsConfigDict(
        env_prefix="COLLABSIM_",
        case_sensitive=False,
        env_file=PROJECT_ROOT / ".env",
        env_file_encoding="utf-8",
        extra="ignore"
    )

    @field_validator("LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        valid_levels = ["TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"]
        v = v.upper()
        if v not in valid_levels:
            raise ValueError(f"Log level must be one of: {', '.join(valid_levels)}")
        return v

    @field_validator("LOG_FORMAT")
    @classmethod
    def validate_log_format(cls, v: str) -> str:
        valid_formats = ["simple", "detailed"]
        v = v.lower()
        if v not in valid_formats:
            raise ValueError(f"Log format must be one of: {', '.join(valid_formats)}")
        return v

    @field_validator("DEFAULT_HORIZON", "GRID_POINTS", "FIGURE_WORKERS")
    @classmethod
    def validate_positive_count(cls, v: int) -> int:
        if v < 1:
            raise ValueError("Count settings must be at least 1")
        return v

    @field_validator("GRID_POINTS")
    @classmethod
    def validate_grid_points(cls, v: int) -> int:
        if v < 3:
            raise ValueError("Grid scan needs at least 3 points")
        return v

    @field_validator("SEARCH_TOLERANCE")
    @classmethod
    def validate_tolerance(cls, v: float) -> float:
        if not 0 < v < 0.1:
            raise ValueError("Search tolerance must be in (0, 0.1)")
        return v

    @model_validator(mode="after")
    def validate_interval(self) -> "CollabSimSettings":
        if not 0 < self.SEARCH_INTERVAL_LOW < self.SEARCH_INTERVAL_HIGH <= 1:
            raise ValueError("Search interval must satisfy 0 < low < high <= 1")
        return self


@lru_cache()
def get_settings() -> CollabSimSettings:
    """Get cached settings instance."""
    return CollabSimSettings()


def clear_settings_cache() -> None:
    """Clear the settings cache to force reload from environment."""
    get_settings.cache_clear()
