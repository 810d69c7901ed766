"""Runtime settings loaded from YAML, ``.env`` and ``PAULI_FORGE_*`` variables."""

import os
from functools import lru_cache
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, Field
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
    YamlConfigSettingsSource,
)

from pauli_forge.shared.constants import (
    DEFAULT_CONFIG_FILE,
    DEFAULT_DIAMOND_RESTARTS,
    DEFAULT_FIT_ITERATIONS,
    DEFAULT_FIT_RESTARTS,
    DEFAULT_SCAN_JOBS,
    DEFAULT_SEED,
    FIT_RESIDUAL_TOL,
    MAX_DENSITY_QUBITS,
    MAX_STATEVECTOR_QUBITS,
)


class LoggingSettings(BaseModel):
    level: Literal["debug", "info", "warning", "error"] = "info"
    format: Literal["json", "console"] = "console"


class SimulatorSettings(BaseModel):
    max_statevector_qubits: int = Field(default=MAX_STATEVECTOR_QUBITS, ge=1)
    max_density_qubits: int = Field(default=MAX_DENSITY_QUBITS, ge=1)
    max_memory_mb: Optional[int] = Field(default=None, ge=1)


class OneprSettings(BaseModel):
    restarts: int = Field(default=DEFAULT_FIT_RESTARTS, ge=1)
    max_iterations: int = Field(default=DEFAULT_FIT_ITERATIONS, ge=1)
    improvement_tol: float = Field(default=1e-12, gt=0)
    residual_tol: float = Field(default=FIT_RESIDUAL_TOL, gt=0)


class DiamondSettings(BaseModel):
    restarts: int = Field(default=DEFAULT_DIAMOND_RESTARTS, ge=1)
    min_restarts: int = Field(default=8, ge=2)
    agreement: float = Field(default=1e-5, gt=0)


class ScanSettings(BaseModel):
    jobs: int = Field(default=DEFAULT_SCAN_JOBS, ge=1)


class Settings(BaseSettings):
    """Process-wide settings.

    Precedence: explicit kwargs > environment > .env > YAML file > defaults.
    """

    model_config = SettingsConfigDict(
        env_prefix="PAULI_FORGE_",
        env_file=".env",
        env_nested_delimiter="__",
        extra="ignore",
    )

    environment: str = "default"
    seed: int = DEFAULT_SEED
    logging: LoggingSettings = LoggingSettings()
    simulator: SimulatorSettings = SimulatorSettings()
    onepr: OneprSettings = OneprSettings()
    diamond: DiamondSettings = DiamondSettings()
    scan: ScanSettings = ScanSettings()

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        yaml_file = Path(os.environ.get("PAULI_FORGE_CONFIG_FILE", DEFAULT_CONFIG_FILE))
        return (
            init_settings,
            env_settings,
            dotenv_settings,
            YamlConfigSettingsSource(settings_cls, yaml_file=yaml_file),
        )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Get the cached settings instance."""
    return Settings()
