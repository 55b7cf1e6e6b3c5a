"""
Super Catalan Verifier - Configuration Settings
"""
from typing import Optional
from functools import lru_cache

from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

# Load environment variables from .env file if it exists
load_dotenv()


class Settings(BaseSettings):
    """Application settings loaded from SUPERCAT_* environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="SUPERCAT_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",  # Ignore unknown env vars
    )

    # App
    APP_NAME: str = "Super Catalan Verifier"
    DEBUG: bool = False
    API_VERSION: str = "v1"
    LOG_LEVEL: str = "INFO"

    # Scan defaults (mirror the CLI flags)
    PRIMES: str = "3..300"
    SUITES: str = "all"
    N_MAX: int = 60
    FORMAT: Optional[str] = None
    OUT: Optional[str] = None
    JOBS: int = 1
    SELF_TEST: bool = False

    # Bounds for the O(p^2) suites
    LEMMA_PRIME_MAX: int = 100
    POINTWISE_PRIME_MAX: int = 60
    MT_SQUARE_PRIME_MAX: int = 97
    INNER_SUM_N_MAX: int = 40

    # Exact kernels
    PASCAL_MAX_ROW: int = 1200


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


# Global settings instance
settings = get_settings()
