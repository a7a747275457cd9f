"""Centralized configuration settings."""
from __future__ import annotations

import os
from dataclasses import dataclass, field

_TRUTHY = ("1", "true", "yes", "on")


@dataclass
class SolverSettings:
    """Defaults for the optimization driver and the exact oracle."""
    default_radius: int = 2
    default_timeout: float = 300.0  # seconds
    merge_attempts: int = 10
    oracle_limit: int = 9  # max vertices the exact oracle accepts
    default_seed: int = 0


@dataclass
class ReportSettings:
    """Settings for stats and report output."""
    json_indent: int = 2


@dataclass
class LoggingSettings:
    """Settings for console logging."""
    level: str = "WARNING"
    rich_tracebacks: bool = True


@dataclass
class Settings:
    """Main application settings container."""
    solver: SolverSettings = field(default_factory=SolverSettings)
    report: ReportSettings = field(default_factory=ReportSettings)
    logging: LoggingSettings = field(default_factory=LoggingSettings)

    debug: bool = False

    def __post_init__(self):
        """Load settings from environment variables."""
        self.debug = os.environ.get("WCOL_DEBUG", "").strip().lower() in _TRUTHY

        if radius := _env_int("WCOL_RADIUS"):
            self.solver.default_radius = radius
        if (timeout := _env_float("WCOL_TIMEOUT")) is not None:
            self.solver.default_timeout = timeout
        if attempts := _env_int("WCOL_MERGE_ATTEMPTS"):
            self.solver.merge_attempts = attempts
        if limit := _env_int("WCOL_ORACLE_LIMIT"):
            self.solver.oracle_limit = limit
        if (seed := _env_int("WCOL_SEED")) is not None:
            self.solver.default_seed = seed

        if level := os.environ.get("WCOL_LOG_LEVEL"):
            self.logging.level = level.strip().upper()
        if self.debug:
            self.logging.level = "DEBUG"


def _env_int(name: str) -> int | None:
    raw = os.environ.get(name)
    if raw is None:
        return None
    try:
        return int(raw.strip())
    except ValueError:
        return None


def _env_float(name: str) -> float | None:
    raw = os.environ.get(name)
    if raw is None:
        return None
    try:
        return float(raw.strip())
    except ValueError:
        return None


# Global settings instance
settings = Settings()
