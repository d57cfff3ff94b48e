"""Environment-driven defaults.

Every value can be overridden with a ``QMC_TOOLKIT_``-prefixed environment
variable (e.g. ``QMC_TOOLKIT_EXHAUSTIVE_GUARD=1000000``). Call sites accept
explicit keyword overrides; the settings only supply the fallback.
"""

from functools import lru_cache
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class ToolkitSettings(BaseSettings):
    """Process-wide defaults for searches, studies and the CLI."""

    output_root: Path = Field(
        default=Path("qmc-toolkit-runs"),
        description="Directory under which CLI runs create their output directory",
    )
    exhaustive_guard: int = Field(
        default=2**24,
        ge=1,
        description="Maximum number of candidates an exhaustive enumeration may visit",
    )
    sobol_enumeration_guard: int = Field(
        default=2**20,
        ge=1,
        description="Per-coordinate Sobol' direction-number space enumerated in full below this size",
    )
    box_count_guard_k: int = Field(
        default=8,
        ge=1,
        description="Largest k accepted by the box-counting t-value oracle",
    )
    default_output_digits: int = Field(
        default=31,
        ge=1,
        le=63,
        description="Binary output digits w when none is given",
    )
    workers: int = Field(
        default=1,
        ge=1,
        description="Threads used for candidate evaluation and replicate generation",
    )
    log_level: str = "WARNING"

    model_config = SettingsConfigDict(env_prefix="QMC_TOOLKIT_")


@lru_cache(maxsize=1)
def get_settings() -> ToolkitSettings:
    """Return the cached settings instance."""
    return ToolkitSettings()
