"""Configuration management for ncinvert."""
import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)

# The .env file sits at the project root, two levels above backend/ncinvert/
PROJECT_ROOT = Path(__file__).parent.parent.parent
ENV_FILE_PATH = PROJECT_ROOT / ".env"

CAP_NAMES = (
    "max_degree",
    "pf_brute_force_cap",
    "ndpf_cap",
    "tree_cap",
    "gamma_cap",
    "isomorphism_cap",
    "triangle_rows_cap",
)


class Settings(BaseSettings):
    """Application settings with environment variable support."""

    model_config = SettingsConfigDict(
        env_file=str(ENV_FILE_PATH),
        env_prefix="NCINVERT_",
        case_sensitive=False,
        extra="ignore",
    )

    # Application Configuration
    app_version: str = Field("1.0.0")
    log_level: str = Field("INFO")

    # Degree and enumeration caps
    max_degree: int = Field(8, ge=0)
    pf_brute_force_cap: int = Field(7, ge=0)
    ndpf_cap: int = Field(12, ge=0)
    tree_cap: int = Field(9, ge=0)
    gamma_cap: int = Field(9, ge=0)
    isomorphism_cap: int = Field(8, ge=0)
    triangle_rows_cap: int = Field(12, ge=0)

    # Verification
    default_jobs: int = Field(1, ge=1)

    # NCINVERT_CAP: overrides every cap at once
    cap: Optional[int] = Field(None, ge=0)

    def effective_cap(self, name: str) -> int:
        """
        Get the effective value of a cap.

        Args:
            name: One of CAP_NAMES

        Returns:
            The override when one is set, the named cap otherwise
        """
        if name not in CAP_NAMES:
            raise KeyError(name)
        if self.cap is not None:
            _warn_override(self.cap)
            return self.cap
        return getattr(self, name)

    def apply_cap_override(self, value: Optional[int]) -> None:
        """Set (or clear, with None) the global cap override for this process."""
        self.cap = value
        if value is not None:
            _warn_override(value)

    @contextmanager
    def raised(self, name: str, value: int) -> Iterator[None]:
        """
        Lift one named cap to at least value for the duration of a block.

        A global override set with apply_cap_override still takes precedence.

        Args:
            name: One of CAP_NAMES
            value: Lower bound for the cap inside the block
        """
        if name not in CAP_NAMES:
            raise KeyError(name)
        previous = getattr(self, name)
        setattr(self, name, max(previous, value))
        try:
            yield
        finally:
            setattr(self, name, previous)


_warned_overrides = set()


def _warn_override(value: int) -> None:
    if value not in _warned_overrides:
        _warned_overrides.add(value)
        logger.warning(f"⚠️  Enumeration and degree caps overridden: every cap is now {value}")


# Global settings instance
settings = Settings()
