"""
Settings read from the environment and an optional ``.env`` file.

Variables use the ``VPW_`` prefix (``VPW_THETA``, ``VPW_PLOT_GRID``,
``VPW_DECIMAL``, ``VPW_LOG_LEVEL``, ``VPW_SINGULAR_TOL``). Real environment
variables win over the file. Only the CLI reads settings; library functions
take explicit arguments.
"""

import os
from pathlib import Path

from dotenv import dotenv_values, find_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from .basis.base import VpParameterError
from .basis.vpkernel import DEFAULT_SINGULAR_TOL
from .transform.pyramid import DEFAULT_THETA

ENV_PREFIX = "VPW_"

# Plot points per table.
DEFAULT_GRID_SIZE = 2000


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    theta: float = Field(default=DEFAULT_THETA, gt=0.0, lt=1.0)
    plot_grid: int = Field(default=DEFAULT_GRID_SIZE, ge=2)
    decimal: bool = False
    log_level: str = "INFO"
    singular_tol: float = Field(default=DEFAULT_SINGULAR_TOL, gt=0.0)

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level {value!r}")
        return level


def load_settings(env_file: str | Path | None = None) -> Settings:
    """
    Build settings from ``env_file`` (or a ``.env`` found from the working
    directory) overlaid with the process environment.

    :raises VpParameterError: if a variable does not validate
    """
    path = str(env_file) if env_file else find_dotenv(usecwd=True)
    raw: dict[str, str | None] = dict(dotenv_values(path)) if path else {}
    raw.update(os.environ)

    values = {}
    for name in Settings.model_fields:
        value = raw.get(ENV_PREFIX + name.upper())
        if value is not None:
            values[name] = value
    try:
        return Settings(**values)
    except ValidationError as exc:
        raise VpParameterError(f"invalid configuration: {exc}") from exc
