"""Centralized configuration via Pydantic BaseSettings."""

from functools import lru_cache
from pathlib import Path

from pydantic import field_validator
from pydantic_settings import BaseSettings

_VERSION_FILE = Path(__file__).resolve().parent.parent / "VERSION"


def get_version() -> str:
    """Read the current package version from the VERSION file."""
    try:
        return _VERSION_FILE.read_text().strip()
    except FileNotFoundError:
        return "0.0.0"


class Settings(BaseSettings):
    # Logging
    debug: bool = False
    log_level: str = "INFO"
    log_file: str | None = None
    show_progress: bool = False

    # Sieve
    segment_size: int = 2**22
    oracle_cap: int = 10**6
    x_cap: int = 10**9
    threads: int = 1

    # Euler-product cutoffs
    euler_cutoff: int = 10**7
    xi_cutoff: int = 10**8
    a_cutoff: int = 10**7
    mp_dps: int = 30

    # Verification
    verify_band: float = 0.4
    verify_xs: str = "1e4..1e8"

    # Output
    output_dir: str = "./out"

    # Census cache
    cache_enabled: bool = False
    database_url: str = "sqlite:///./sylow_census.db"

    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "extra": "ignore",
    }

    @field_validator("segment_size", "threads", "oracle_cap", "x_cap", "euler_cutoff",
                     "xi_cutoff", "a_cutoff")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"must be a positive integer, got {value}")
        return value

    @field_validator("mp_dps")
    @classmethod
    def _working_precision(cls, value: int) -> int:
        # error bounds assume at least double precision
        if value < 17:
            raise ValueError(f"mp_dps must be >= 17, got {value}")
        return value

    @field_validator("verify_band")
    @classmethod
    def _band(cls, value: float) -> float:
        if not 0 < value < 1:
            raise ValueError(f"verify_band must lie in (0, 1), got {value}")
        return value

    @field_validator("log_level")
    @classmethod
    def _level(cls, value: str) -> str:
        value = value.upper()
        if value not in {"DEBUG", "INFO", "WARNING", "ERROR"}:
            raise ValueError(f"unknown log level {value!r}")
        return value


@lru_cache()
def get_settings() -> Settings:
    return Settings()
