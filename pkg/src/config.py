"""Configuration settings for exturan."""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="EXTURAN_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # App
    app_name: str = "exturan"
    app_version: str = "0.1.0"
    debug: bool = False
    log_level: str = "INFO"

    # Enumeration
    budget: int = Field(
        default=2**26,
        ge=1,
        description="Largest labeled edge-subset space an exhaustive sweep may walk",
    )
    shard_width: int = Field(default=4, ge=0, le=16)
    jobs: int = Field(default=1, ge=1)
    max_witnesses: int = Field(default=16, ge=1)
    progress: bool = False

    # Solvers
    solver_max_order: int = Field(
        default=18,
        ge=1,
        description="Largest order accepted by the circumference and longest-path solvers",
    )
    dfs_max_order: int = Field(
        default=10,
        ge=1,
        description="Orders up to this use DFS backtracking, larger ones the subset DP",
    )
    oracle_max_order: int = 12
    canonical_max_order: int = 8

    # Constructions
    check_constructions: bool = True


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
